// Generated by scripts/gen_builtin_source.py from data/instances/*.txt.
// Do not edit by hand; edit the data files and regenerate.

#include "jobshop/instance.hpp"

namespace jobshop::detail {

const BuiltinInstance kBuiltinInstances[] = {
    {"abz5", R"raw(10 10
4 88 8 68 6 94 5 99 1 67 2 89 9 77 7 99 0 86 3 92
5 72 3 50 6 69 4 75 2 94 8 66 0 92 1 82 7 94 9 63
9 83 8 61 0 83 1 65 6 64 5 85 7 78 4 85 2 55 3 77
7 94 2 68 1 61 4 99 3 54 6 75 5 66 0 76 9 63 8 67
3 69 4 88 9 82 8 95 0 99 2 67 6 95 5 68 7 67 1 86
1 99 4 81 5 64 6 66 8 80 2 80 7 69 9 62 3 79 0 88
7 50 1 86 4 97 3 96 0 95 8 97 2 66 5 99 6 52 9 71
4 98 6 73 3 82 2 51 1 71 5 94 7 85 0 62 8 95 9 79
0 94 6 71 3 81 7 85 1 66 2 90 4 76 5 58 8 93 9 97
3 50 0 59 1 82 8 67 7 56 9 96 6 58 4 81 5 59 2 96
)raw"},
    {"abz6", R"raw(10 10
7 62 8 24 5 25 3 84 4 47 6 38 2 82 0 93 9 24 1 66
5 47 2 97 8 92 9 22 1 93 4 29 7 56 3 80 0 78 6 67
1 45 7 46 6 22 2 26 9 38 0 69 4 40 3 33 8 75 5 96
4 85 8 76 5 68 9 88 3 36 6 75 2 56 1 35 0 77 7 85
8 60 9 20 7 25 3 63 4 81 0 52 1 30 5 98 6 54 2 86
3 87 9 73 5 51 2 95 4 65 1 86 6 22 8 58 0 80 7 65
5 81 2 53 7 57 6 71 9 81 0 43 4 26 8 54 3 58 1 69
4 20 6 86 5 21 8 79 9 62 2 34 0 27 1 81 7 30 3 46
9 68 6 66 5 98 8 86 7 66 0 56 3 82 1 95 4 47 2 78
0 30 3 50 7 34 2 58 1 77 5 34 8 84 4 40 9 46 6 44
)raw"},
    {"abz7", R"raw(20 15
2 24 3 12 9 17 4 27 0 21 6 25 8 27 7 26 1 30 5 31 11 18 14 16 13 39 10 19 12 26
6 30 3 15 12 20 11 19 1 24 13 15 10 28 2 36 5 26 7 15 0 11 8 23 14 20 9 26 4 28
6 35 0 22 13 23 7 32 2 20 3 12 12 19 10 23 9 17 1 14 5 16 11 29 8 16 4 22 14 22
9 20 6 29 1 19 7 14 12 33 4 30 0 32 5 21 11 29 10 24 14 25 2 29 3 13 8 20 13 18
11 23 13 20 1 28 6 32 7 16 5 18 8 24 9 23 3 24 10 34 2 24 0 24 14 28 12 15 4 18
8 24 11 19 14 21 1 33 7 34 6 35 5 40 10 36 3 23 2 26 4 15 9 28 13 38 12 13 0 25
13 27 3 30 6 21 8 19 12 12 4 27 2 39 9 13 14 12 5 36 10 21 11 17 1 29 0 17 7 33
5 27 4 19 6 29 9 20 3 21 10 40 8 14 14 39 13 39 2 27 1 36 12 12 11 37 7 22 0 13
13 32 11 29 8 24 3 27 5 40 4 21 9 26 0 27 14 27 6 16 2 21 10 13 7 28 12 28 1 32
12 35 1 11 5 39 14 18 7 23 0 34 3 24 13 11 8 30 11 31 4 15 10 15 2 28 9 26 6 33
10 28 5 37 12 29 1 31 7 25 8 13 14 14 4 20 3 27 9 25 13 31 11 14 6 25 2 39 0 36
0 22 11 25 5 28 13 35 4 31 8 21 9 20 14 19 2 29 7 32 10 18 1 18 3 11 12 17 6 15
12 39 5 32 2 36 8 14 3 28 13 37 0 38 6 20 7 19 11 12 14 22 1 36 4 15 9 32 10 16
8 28 1 29 14 40 12 23 4 34 5 33 6 27 10 17 0 20 7 28 11 21 2 21 13 20 9 33 3 27
9 21 14 34 3 30 12 38 0 11 11 16 2 14 5 14 1 34 8 33 4 23 13 40 10 12 6 23 7 27
9 13 14 40 7 36 4 17 0 13 5 33 8 25 13 24 10 23 3 36 2 29 1 18 11 13 6 33 12 13
3 25 5 15 2 28 12 40 7 39 1 31 8 35 6 31 11 36 4 12 10 33 14 19 9 16 13 27 0 21
12 22 10 14 0 12 2 20 5 12 1 18 11 17 8 39 14 31 3 31 7 32 9 20 13 29 4 13 6 26
5 18 10 30 7 38 14 22 13 15 11 20 9 16 3 17 1 12 2 13 12 40 6 17 8 30 4 38 0 13
9 31 8 39 12 27 1 14 5 33 3 31 11 22 13 36 0 16 7 11 14 14 4 29 6 28 2 22 10 17
)raw"},
    {"abz8", R"raw(20 15
0 19 9 33 2 32 13 18 10 39 8 34 6 25 4 36 11 40 12 33 1 31 14 30 3 34 5 26 7 13
9 11 10 22 14 19 5 12 4 25 6 38 0 29 7 39 13 19 11 22 1 23 3 20 2 40 12 19 8 26
3 25 8 17 11 24 13 40 10 32 14 16 5 39 9 19 0 24 1 39 4 17 2 35 7 38 6 20 12 31
14 22 3 36 2 34 12 17 4 30 13 12 1 13 6 25 9 12 7 18 10 31 0 39 5 40 8 26 11 37
12 32 14 15 1 35 7 13 8 32 11 23 6 22 4 21 0 38 2 38 3 40 10 31 5 11 13 37 9 16
10 23 12 38 8 11 14 27 9 11 6 25 5 14 4 12 2 27 11 26 7 29 3 28 13 21 0 20 1 30
6 39 8 38 0 15 12 27 10 22 9 27 2 32 4 40 3 12 13 20 14 21 11 22 5 17 7 38 1 27
11 11 13 24 10 38 8 15 9 19 14 13 5 30 0 26 2 29 6 33 12 21 1 15 3 21 4 28 7 33
8 20 6 17 5 26 3 34 9 23 0 16 2 18 4 35 12 24 10 16 11 26 7 12 14 13 13 27 1 19
1 18 7 37 14 27 9 40 5 40 6 17 8 22 3 17 10 30 0 38 4 21 12 32 11 24 13 24 2 30
11 19 0 22 13 36 6 18 5 22 3 17 14 35 10 34 7 23 8 19 2 29 1 22 12 17 4 33 9 39
6 32 3 22 12 24 5 13 4 13 1 11 0 11 13 25 8 13 2 15 10 33 11 17 14 16 9 38 7 24
14 16 13 16 1 37 8 25 2 26 3 11 9 34 4 14 0 20 6 36 12 12 5 29 10 25 7 32 11 12
8 20 10 24 11 27 9 38 5 34 12 39 7 33 4 37 2 31 13 15 14 34 3 33 6 26 1 36 0 14
8 31 0 17 9 13 1 21 10 17 7 19 13 14 3 40 5 32 11 25 2 34 14 23 6 13 12 40 4 26
8 38 12 17 3 14 13 17 4 12 1 35 6 35 0 19 10 36 7 19 9 29 2 31 5 26 11 35 14 37
14 20 3 16 0 33 10 14 5 27 7 31 8 16 6 31 12 28 9 37 4 37 2 29 11 38 1 30 13 36
11 18 3 37 14 16 6 15 8 14 12 11 13 32 5 12 1 11 10 29 7 19 4 12 9 18 2 26 0 39
11 11 2 11 12 22 9 35 14 20 7 31 4 19 3 39 5 28 6 33 10 34 1 38 0 20 13 17 8 28
2 12 12 25 5 23 8 21 6 27 9 30 14 23 11 39 3 26 13 34 7 17 1 24 4 12 0 19 10 36
)raw"},
    {"abz9", R"raw(20 15
6 14 5 21 8 13 4 11 1 11 14 35 13 20 11 17 10 18 12 11 2 23 3 13 0 15 7 11 9 35
1 35 5 31 0 13 3 26 6 14 9 17 7 38 12 20 10 19 13 12 8 16 4 34 11 15 14 12 2 14
0 30 4 35 2 40 10 35 6 30 14 23 8 29 13 37 7 38 3 40 9 26 12 11 1 40 11 36 5 17
7 40 5 18 4 12 8 23 0 23 9 14 13 16 12 14 10 23 3 12 6 16 14 32 1 40 11 25 2 29
2 35 3 15 12 31 11 28 6 32 4 30 10 27 7 29 0 38 13 11 1 23 14 17 5 27 9 37 8 29
5 33 3 33 6 19 12 40 10 19 0 33 13 26 2 31 11 28 7 36 4 38 1 21 14 25 9 40 8 35
13 25 0 32 11 33 12 18 4 32 6 28 5 15 3 35 9 14 2 34 7 23 10 32 1 17 14 26 8 19
2 16 12 33 9 34 11 30 13 40 8 12 14 26 5 26 6 15 3 21 1 40 4 32 0 14 7 30 10 35
2 17 10 16 14 20 6 24 8 26 3 36 12 22 0 14 13 11 9 20 7 23 1 29 11 23 4 15 5 40
4 27 9 37 3 40 11 14 13 25 7 30 0 34 2 11 5 15 12 32 1 36 10 12 14 28 8 31 6 23
13 25 0 22 3 27 8 14 5 25 6 20 14 18 7 14 1 19 2 17 4 27 9 22 12 22 11 27 10 21
14 34 10 15 0 22 3 29 13 34 6 40 7 17 2 32 12 20 5 39 4 31 11 16 1 37 8 33 9 13
6 12 12 27 4 17 2 24 8 11 5 19 14 11 3 17 9 25 1 11 11 31 13 33 7 31 10 12 0 22
5 22 14 15 0 16 8 32 7 20 4 22 9 11 13 19 1 30 12 33 6 29 11 18 3 34 10 32 2 18
5 27 3 26 10 28 6 37 4 18 12 12 11 11 13 26 7 27 9 40 14 19 1 24 2 18 0 12 8 34
8 15 5 28 9 25 6 32 1 13 7 38 11 11 2 34 4 25 0 20 10 32 3 23 12 14 14 16 13 20
1 15 4 13 8 37 3 14 10 22 5 24 12 26 7 22 9 34 14 22 11 19 13 32 0 29 2 13 6 35
7 36 5 33 13 28 9 20 10 30 4 33 14 29 0 34 3 22 11 12 6 30 8 12 1 35 2 13 12 35
14 26 11 31 5 35 2 38 13 19 10 35 4 27 8 29 3 39 9 13 6 14 7 26 0 17 1 22 12 15
1 36 7 34 11 33 8 17 14 38 6 39 5 16 3 27 13 29 2 16 0 16 4 19 9 40 12 35 10 39
)raw"},
    {"la01", R"raw(10 5
1 21 0 53 4 95 3 55 2 34
0 21 3 52 4 16 2 26 1 71
3 39 4 98 1 42 2 31 0 12
1 77 0 55 4 79 2 66 3 77
0 83 3 34 2 64 1 19 4 37
1 54 2 43 4 79 0 92 3 62
3 69 4 77 1 87 2 87 0 93
2 38 0 60 1 41 3 24 4 83
3 17 1 49 4 25 0 44 2 98
4 77 3 79 2 43 1 75 0 96
)raw"},
    {"la02", R"raw(10 5
0 20 3 87 1 31 4 76 2 17
4 25 2 32 0 24 1 18 3 81
1 72 2 23 4 28 0 58 3 99
2 86 1 76 4 97 0 45 3 90
4 27 0 42 3 48 2 17 1 46
1 67 0 98 4 48 3 27 2 62
4 28 1 12 3 19 0 80 2 50
1 63 0 94 2 98 3 50 4 80
4 14 0 75 2 50 1 41 3 55
4 72 2 18 1 37 3 79 0 61
)raw"},
    {"la03", R"raw(10 5
1 23 2 45 0 82 4 84 3 38
2 21 1 29 0 18 4 41 3 50
2 38 3 54 4 16 0 52 1 52
4 37 0 54 2 74 1 62 3 57
4 57 0 81 1 61 3 68 2 30
4 81 0 79 1 89 2 89 3 11
3 33 2 20 0 91 4 20 1 66
4 24 1 84 0 32 2 55 3 8
4 56 0 7 3 54 2 64 1 39
4 40 1 83 0 19 2 8 3 7
)raw"},
    {"la04", R"raw(10 5
0 12 2 94 3 92 4 91 1 7
1 19 3 11 4 66 2 21 0 87
1 14 0 75 3 13 4 16 2 20
2 95 4 66 0 7 3 7 1 77
1 45 3 6 4 89 0 15 2 34
3 77 2 20 0 76 4 88 1 53
2 74 1 88 0 52 3 27 4 9
1 88 3 69 0 62 4 98 2 52
2 61 4 9 0 62 1 52 3 90
2 54 4 5 3 59 1 15 0 88
)raw"},
    {"la05", R"raw(10 5
1 72 0 87 4 95 2 66 3 60
4 5 3 35 0 48 2 39 1 54
1 46 3 20 2 21 0 97 4 55
0 59 3 19 4 46 1 34 2 37
4 23 2 73 3 25 1 24 0 28
3 28 0 45 4 5 1 78 2 83
0 53 3 71 1 37 4 29 2 12
4 12 2 87 3 33 1 55 0 38
2 49 3 83 1 40 0 48 4 7
2 65 3 17 0 90 4 27 1 23
)raw"},
    {"la06", R"raw(15 5
1 21 2 34 4 95 0 53 3 55
3 52 4 16 1 71 2 26 0 21
2 31 0 12 1 42 3 39 4 98
3 77 1 77 4 79 0 55 2 66
4 37 3 34 2 64 1 19 0 83
2 43 1 54 0 92 3 62 4 79
0 93 3 69 1 87 4 77 2 87
0 60 1 41 2 38 4 83 3 24
2 98 3 17 4 25 0 44 1 49
0 96 4 77 3 79 1 75 2 43
4 28 2 35 0 95 3 76 1 7
0 61 4 10 2 95 1 9 3 35
4 59 3 16 1 91 2 59 0 46
4 43 1 52 0 28 2 27 3 50
0 87 1 45 2 39 4 9 3 41
)raw"},
    {"la07", R"raw(15 5
0 47 4 57 1 71 3 96 2 14
0 75 1 60 4 22 3 79 2 65
3 32 0 33 2 69 1 31 4 58
0 44 1 34 4 51 3 58 2 47
3 29 1 44 0 62 2 17 4 8
1 15 2 40 0 97 4 38 3 66
2 58 1 39 0 57 4 20 3 50
2 57 3 32 4 87 0 63 1 21
4 56 0 84 2 90 1 85 3 61
4 15 0 20 1 67 3 30 2 70
4 84 0 82 1 23 2 45 3 38
3 50 2 21 0 18 4 41 1 29
4 16 1 52 0 52 2 38 3 54
4 37 0 54 3 57 2 74 1 62
4 57 1 61 0 81 2 30 3 68
)raw"},
    {"la08", R"raw(15 5
3 92 2 94 0 12 4 91 1 7
2 21 1 19 0 87 3 11 4 66
1 14 3 13 0 75 4 16 2 20
2 95 4 66 0 7 1 77 3 7
2 34 4 89 3 6 1 45 0 15
4 88 3 77 2 20 1 53 0 76
4 9 3 27 0 52 1 88 2 74
3 69 2 52 0 62 1 88 4 98
3 90 0 62 4 9 2 61 1 52
4 5 2 54 3 59 0 88 1 15
0 41 1 50 4 78 3 53 2 23
0 38 4 72 2 91 3 68 1 71
0 45 3 95 4 52 2 25 1 6
3 30 1 66 0 23 4 36 2 17
2 95 0 71 3 76 1 8 4 88
)raw"},
    {"la09", R"raw(15 5
1 66 3 85 2 84 0 62 4 19
3 59 1 64 2 46 4 13 0 25
4 88 3 80 1 73 2 53 0 41
0 14 1 67 2 57 3 74 4 47
0 84 4 64 2 41 3 84 1 78
0 63 3 28 1 46 2 26 4 52
3 10 2 17 4 73 1 11 0 64
2 67 1 97 3 95 4 38 0 85
2 95 4 46 0 59 1 65 3 93
2 43 4 85 3 32 1 85 0 60
4 49 3 41 2 61 0 66 1 90
1 17 0 23 3 70 4 99 2 49
4 40 3 73 0 73 1 98 2 68
3 57 1 9 2 7 0 13 4 98
0 37 1 85 2 17 4 79 3 41
)raw"},
    {"la10", R"raw(15 5
1 58 2 44 3 5 0 9 4 58
1 89 0 97 4 96 3 77 2 84
0 77 1 87 2 81 4 39 3 85
3 57 1 21 2 31 0 15 4 73
2 48 0 40 1 49 3 70 4 71
3 34 4 82 2 80 0 10 1 22
1 91 4 75 0 55 2 17 3 7
2 62 3 47 1 72 4 35 0 11
0 64 3 75 4 50 1 90 2 94
2 67 4 20 3 15 0 12 1 71
0 52 4 93 3 68 2 29 1 57
2 70 0 58 1 93 4 7 3 77
3 27 2 82 1 63 4 6 0 95
1 87 2 56 4 36 0 26 3 48
3 76 2 36 0 36 4 15 1 8
)raw"},
    {"la19", R"raw(10 10
2 44 3 5 5 58 4 97 0 9 7 84 8 77 9 96 1 58 6 89
4 15 7 31 1 87 8 57 0 77 3 85 2 81 5 39 9 73 6 21
9 82 6 22 4 10 3 70 1 49 0 40 8 34 2 48 7 80 5 71
1 91 2 17 7 62 5 75 8 47 4 11 3 7 6 72 9 35 0 55
6 71 1 90 3 75 0 64 2 94 8 15 4 12 7 67 9 20 5 50
7 70 5 93 8 77 2 29 4 58 6 93 3 68 1 57 9 7 0 52
6 87 1 63 4 26 5 6 2 82 3 27 7 56 8 48 9 36 0 95
0 36 5 15 8 41 9 78 3 76 6 84 4 30 7 76 2 36 1 8
5 88 2 81 3 13 6 82 4 54 7 13 8 29 9 40 1 78 0 75
9 88 4 54 6 64 7 32 0 52 2 6 8 54 5 82 3 6 1 26
)raw"},
    {"la21", R"raw(15 10
2 34 3 55 5 95 9 16 4 21 6 71 0 53 8 52 1 21 7 26
3 39 2 31 0 12 1 42 9 79 8 77 6 77 5 98 4 55 7 66
1 19 0 83 3 34 4 92 6 54 9 79 8 62 5 37 2 64 7 43
4 60 2 87 8 24 5 77 3 69 7 38 1 87 6 41 9 83 0 93
8 79 9 77 2 98 4 96 3 17 0 44 7 43 6 75 1 49 5 25
8 35 7 95 6 9 9 10 2 35 1 7 5 28 4 61 0 95 3 76
4 28 5 59 3 16 9 43 0 46 8 50 6 52 7 27 2 59 1 91
5 9 4 20 2 39 6 54 1 45 7 71 0 87 3 41 9 43 8 14
1 28 5 33 0 78 3 26 2 37 7 8 8 66 6 89 9 42 4 33
2 94 5 84 6 78 9 81 1 74 3 27 8 69 0 69 7 45 4 96
1 31 4 24 0 20 2 17 9 25 8 81 5 76 3 87 7 32 6 18
5 28 9 97 0 58 4 45 6 76 3 99 2 23 1 72 8 90 7 86
5 27 9 48 8 27 7 62 4 98 6 67 3 48 0 42 1 46 2 17
1 12 8 50 0 80 2 50 9 80 3 19 5 28 6 63 4 94 7 98
4 61 3 55 6 37 5 14 2 50 8 79 1 41 9 72 7 18 0 75
)raw"},
    {"la24", R"raw(15 10
7 8 9 75 0 72 6 74 4 30 8 43 2 38 5 98 1 26 3 19
6 19 8 73 3 43 0 23 1 85 4 39 5 13 9 26 2 67 7 9
1 50 3 93 5 80 4 7 0 55 2 61 6 57 8 72 9 42 7 46
1 68 7 43 4 99 6 60 5 68 0 91 8 11 3 96 9 11 2 72
7 84 2 34 8 40 5 7 1 70 6 74 3 12 0 43 9 69 4 30
8 60 0 49 4 59 5 72 9 63 1 69 7 99 6 45 3 27 2 9
6 71 2 91 8 65 1 90 9 98 4 8 7 50 0 75 5 37 3 17
8 62 7 90 5 98 3 31 2 91 4 38 9 72 1 9 0 72 6 49
4 35 0 39 9 74 5 25 7 47 3 52 2 63 8 21 6 35 1 80
9 58 0 5 3 50 8 52 1 88 6 20 2 68 5 24 4 53 7 57
7 99 3 91 4 33 5 19 2 18 6 38 0 24 9 35 1 49 8 9
0 68 3 60 2 77 7 10 8 60 5 15 9 72 1 18 6 90 4 18
9 79 1 60 3 56 6 91 2 40 8 86 7 72 0 80 5 89 4 51
4 10 2 92 5 23 6 46 8 40 7 72 3 6 1 23 0 95 9 34
2 24 5 29 9 49 8 55 0 47 6 77 3 77 7 8 1 28 4 48
)raw"},
    {"la25", R"raw(15 10
8 14 4 75 3 12 2 38 0 76 5 97 9 12 1 29 7 44 6 66
5 38 3 82 2 85 4 58 6 87 9 89 0 43 1 80 7 69 8 92
9 5 1 84 0 43 6 48 4 8 7 7 3 41 5 61 8 66 2 14
2 42 1 8 0 96 5 19 4 59 7 97 9 73 8 43 3 74 6 41
6 55 2 70 3 75 8 42 4 37 7 23 1 48 5 5 9 38 0 7
8 9 2 72 7 31 0 79 5 73 3 95 4 25 6 43 9 60 1 56
0 97 2 64 3 78 5 21 4 94 9 31 8 53 6 16 7 86 1 7
3 86 7 85 9 63 0 61 2 65 4 30 5 32 1 33 8 44 6 59
2 44 3 16 4 11 6 45 1 30 9 84 8 93 0 60 5 61 7 90
7 36 8 31 4 47 6 52 0 32 5 11 2 28 9 35 3 20 1 49
8 20 6 49 7 74 4 10 5 17 3 34 0 85 2 77 9 68 1 84
1 85 5 7 8 71 6 59 4 76 0 17 3 29 2 17 7 48 9 13
2 15 6 87 7 11 1 39 4 39 8 43 0 19 3 32 9 16 5 64
6 32 2 92 5 33 8 82 1 83 7 57 9 99 4 91 3 99 0 8
4 88 7 7 8 27 1 38 3 91 2 69 6 21 9 62 5 39 0 48
)raw"},
    {"la27", R"raw(20 10
3 60 4 48 5 95 0 87 1 72 9 5 8 35 7 39 6 54 2 66
7 37 6 34 0 97 5 55 2 21 3 20 4 59 9 46 8 19 1 46
4 45 2 73 1 24 8 28 0 28 3 25 5 23 7 83 9 5 6 78
0 53 2 12 9 12 1 37 8 33 3 71 6 55 5 29 7 87 4 38
4 90 2 49 9 27 7 65 5 7 6 23 0 48 3 83 8 17 1 40
3 85 4 25 2 84 6 64 9 13 1 66 7 46 8 59 0 62 5 19
5 88 6 67 4 14 0 41 1 73 7 57 2 53 3 80 9 47 8 74
1 78 5 64 4 63 6 46 3 84 0 84 8 28 9 52 7 26 2 41
1 11 0 64 6 97 9 38 2 17 4 85 5 73 3 10 8 95 7 67
3 93 2 95 7 43 1 65 8 32 0 59 6 85 5 46 9 85 4 60
2 61 3 41 5 49 4 23 0 66 7 49 8 70 9 99 1 90 6 17
4 13 7 7 1 98 8 57 0 73 3 73 2 68 5 40 9 98 6 9
9 86 6 76 4 14 3 41 1 85 0 37 8 19 2 17 7 54 5 79
1 40 2 53 7 97 5 87 8 96 4 84 3 16 6 66 9 52 0 95
6 33 1 33 3 87 0 18 2 55 8 13 4 77 7 60 9 42 5 74
7 92 5 91 8 79 2 54 4 69 6 79 3 33 1 61 9 39 0 16
6 82 1 41 4 28 5 64 2 78 3 76 7 6 8 49 9 47 0 58
0 52 5 42 8 24 9 91 3 47 6 88 4 91 7 52 2 28 1 35
5 82 2 76 3 86 6 93 4 84 7 38 8 95 9 37 1 21 0 23
9 77 4 8 6 42 7 64 0 70 2 45 8 45 5 28 3 67 1 86
)raw"},
    {"la29", R"raw(20 10
8 14 2 38 7 44 0 76 5 97 3 12 4 75 6 66 9 12 1 29
0 43 2 85 3 82 5 38 4 58 9 89 8 92 6 87 7 69 1 80
3 41 7 7 9 5 0 43 2 14 4 8 5 61 1 84 8 66 6 48
2 42 3 74 4 59 6 41 1 8 9 73 8 43 0 96 5 19 7 97
7 23 8 42 4 37 6 55 0 7 5 5 2 70 9 38 3 75 1 48
8 9 6 43 7 31 4 25 5 73 3 95 0 79 2 72 9 60 1 56
1 7 5 21 8 53 6 16 4 94 0 97 3 78 2 64 7 86 9 31
2 65 6 59 7 85 1 33 4 30 8 44 0 61 3 86 9 63 5 32
6 45 2 44 5 61 8 93 1 30 7 90 9 84 4 11 3 16 0 60
4 47 7 36 8 31 1 49 3 20 2 28 6 52 9 35 5 11 0 32
2 77 4 10 9 68 5 17 0 85 1 84 8 20 6 49 7 74 3 34
0 17 5 7 1 85 3 29 2 17 4 76 6 59 8 71 9 13 7 48
6 87 4 39 8 43 7 11 2 15 3 32 5 64 0 19 1 39 9 16
5 33 3 99 6 32 4 91 8 82 2 92 9 99 7 57 1 83 0 8
3 91 5 39 2 69 8 27 7 7 6 21 1 38 9 62 4 88 0 48
2 67 7 80 3 24 0 88 4 18 1 44 8 45 9 64 5 80 6 38
9 59 3 72 6 47 4 40 7 21 5 43 0 51 8 52 1 24 2 15
3 70 2 31 6 20 8 76 1 40 7 43 0 32 5 88 9 5 4 77
4 47 5 64 9 85 3 49 7 58 1 26 0 32 8 80 2 14 6 94
5 59 2 96 0 5 7 79 8 34 4 75 3 26 6 9 9 23 1 11
)raw"}
};

const std::size_t kBuiltinInstanceCount =
    sizeof(kBuiltinInstances) / sizeof(kBuiltinInstances[0]);

}  // namespace jobshop::detail
