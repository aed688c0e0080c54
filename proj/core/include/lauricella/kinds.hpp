#ifndef LAURICELLA_KINDS_HPP
#define LAURICELLA_KINDS_HPP

#include <string>
#include <vector>

#include "lauricella/matrix.hpp"

namespace lauricella {

// The four generalized k-variable families plus the ten three-variable
// functions that are not instances of them.  F1, F2, F5 and F9 are the
// generalized families at k = 3 and are canonicalized to GA..GD at parse
// time, so they share the evaluation path bit for bit.
enum class KindTag { GA, GB, GC, GD, F3, F4, F6, F7, F8, F10, F11, F12, F13, F14 };

struct LauricellaKind {
  KindTag tag = KindTag::GA;
  int arity = 3; // number of variables k; fixed at 3 for F3..F14

  bool operator==(const LauricellaKind&) const = default;
};

// Parses "GA".."GD" (arity given separately), "FA".."FD" aliases, and
// "F1".."F14".  Throws InputError on unknown names or arity misuse.
LauricellaKind parse_kind(const std::string& name, int arity = 3);
std::string kind_name(const LauricellaKind& kind);      // canonical: "GA", "F12", ...
std::string kind_id_prefix(const LauricellaKind& kind); // catalog ids: "FA", "F12", ...

enum class ParamGroup : int { A = 0, B = 1, C = 2 };

// A slot in a kind's parameter signature, e.g. B2 = {B, index 1}.
struct ParamId {
  ParamGroup group = ParamGroup::A;
  int index = 0; // 0-based

  bool operator==(const ParamId&) const = default;
  bool operator<(const ParamId& o) const {
    return group != o.group ? group < o.group : index < o.index;
  }
};

// One Pochhammer factor of a series coefficient: (param)_{sum_i w_i m_i}.
// Weights are 0/1 per summation axis.
struct FactorSpec {
  ParamId param;
  std::vector<int> weights;
};

// Full coefficient pattern of a kind: numerator factors in printed order
// (A-group then B-group), then the inverse C-group factors.
struct KindSignature {
  int arity = 0;
  int n_a = 0, n_b = 0, n_c = 0;
  std::vector<FactorSpec> numerator;
  std::vector<FactorSpec> denominator;
};

const KindSignature& signature(const LauricellaKind& kind);

// Named parameter lists for one function kind.  List lengths must match
// the kind's signature and all dims must agree.
struct ParameterSet {
  std::vector<ComplexMatrix> a, b, c;

  int dim() const;
  const ComplexMatrix& get(const ParamId& id) const;
  ComplexMatrix& get(const ParamId& id);
};

// Throws DimensionError / InputError when params do not fit the kind.
void validate_parameters(const LauricellaKind& kind, const ParameterSet& params);

int group_size(const KindSignature& sig, ParamGroup g);

// "A", "A2", "B1", "C" ... index is suppressed when the group has a single
// slot in this kind.
std::string format_param(const LauricellaKind& kind, const ParamId& id);
ParamId parse_param(const LauricellaKind& kind, const std::string& name);

// Evaluation point x_1..x_k.
using Point = std::vector<Complex>;

} // namespace lauricella

#endif
