#include "dtwist/ses.hpp"

namespace dtwist {

GroupOps<FreeAutomorphism> aut_group_ops(int rank) {
  GroupOps<FreeAutomorphism> ops;
  ops.identity = [rank]() { return FreeAutomorphism::identity(rank); };
  ops.mul = [](const FreeAutomorphism& f, const FreeAutomorphism& g) {
    return compose(f, g);
  };
  ops.inv = [](const FreeAutomorphism& f) { return invert(f); };
  ops.eq = [](const FreeAutomorphism& f, const FreeAutomorphism& g) {
    return f == g;
  };
  return ops;
}

}  // namespace dtwist
