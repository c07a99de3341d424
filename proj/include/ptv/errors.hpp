#ifndef PTV_ERRORS_HPP
#define PTV_ERRORS_HPP

#include <stdexcept>

namespace ptv {

struct index_error : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct size_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct singular_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct label_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct outside_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct not_nonnegative_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct ambiguous_support_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct exceptional_point_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct solve_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct domain_input_error : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace ptv

#endif
