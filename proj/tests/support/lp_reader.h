#ifndef UPDOM_TESTS_SUPPORT_LP_READER_H_
#define UPDOM_TESTS_SUPPORT_LP_READER_H_

#include <string_view>

#include "updom/model.h"

namespace updom::testing {

// Minimal reader for the LP subset written by export_lp: one objective row,
// named constraint rows, Binary / General sections. Variables are declared in
// the order of the Binary then General sections. Throws ParseError.
LinearModel read_lp(std::string_view text);

}  // namespace updom::testing

#endif  // UPDOM_TESTS_SUPPORT_LP_READER_H_
