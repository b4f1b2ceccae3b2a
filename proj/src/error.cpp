#include "jobshop/error.hpp"

namespace jobshop {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::malformed_header: return "MalformedHeader";
    case Errc::row_arity: return "RowArity";
    case Errc::machine_index_out_of_range: return "MachineIndexOutOfRange";
    case Errc::duplicate_machine_in_route: return "DuplicateMachineInRoute";
    case Errc::negative_processing_time: return "NegativeProcessingTime";
    case Errc::unknown_instance: return "UnknownInstance";
    case Errc::count_mismatch: return "CountMismatch";
    case Errc::too_large: return "TooLarge";
    case Errc::empty_eligible_set: return "EmptyEligibleSet";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::odd_population: return "OddPopulation";
    case Errc::swarming_disabled: return "SwarmingDisabled";
    case Errc::missing_reference: return "MissingReference";
    case Errc::invalid_parameter: return "InvalidParameter";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace jobshop
