#include "ascon/selftest.hpp"

#include "selftest_impl.hpp"

namespace ascon {

std::vector<SelftestCheck> run_selftest() {
  return detail::run_selftest_with<detail::Fault::none>();
}

}  // namespace ascon
