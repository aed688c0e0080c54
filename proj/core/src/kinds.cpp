#include "lauricella/kinds.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace lauricella {

namespace {

std::string tag_str(KindTag t) {
  switch (t) {
    case KindTag::GA: return "GA";
    case KindTag::GB: return "GB";
    case KindTag::GC: return "GC";
    case KindTag::GD: return "GD";
    case KindTag::F3: return "F3";
    case KindTag::F4: return "F4";
    case KindTag::F6: return "F6";
    case KindTag::F7: return "F7";
    case KindTag::F8: return "F8";
    case KindTag::F10: return "F10";
    case KindTag::F11: return "F11";
    case KindTag::F12: return "F12";
    case KindTag::F13: return "F13";
    case KindTag::F14: return "F14";
  }
  return "?";
}

std::vector<int> axis_mask(int k, int i) {
  std::vector<int> w(static_cast<size_t>(k), 0);
  w[static_cast<size_t>(i)] = 1;
  return w;
}
std::vector<int> total_mask(int k) { return std::vector<int>(static_cast<size_t>(k), 1); }
std::vector<int> axes_mask(int k, std::initializer_list<int> idx) {
  std::vector<int> w(static_cast<size_t>(k), 0);
  for (int i : idx) w[static_cast<size_t>(i)] = 1;
  return w;
}

ParamId pa(int i) { return {ParamGroup::A, i}; }
ParamId pb(int i) { return {ParamGroup::B, i}; }
ParamId pc(int i) { return {ParamGroup::C, i}; }

KindSignature make_signature(const LauricellaKind& kind) {
  const int k = kind.arity;
  KindSignature s;
  s.arity = k;
  switch (kind.tag) {
    case KindTag::GA:
      s.n_a = 1; s.n_b = k; s.n_c = k;
      s.numerator.push_back({pa(0), total_mask(k)});
      for (int i = 0; i < k; ++i) s.numerator.push_back({pb(i), axis_mask(k, i)});
      for (int i = 0; i < k; ++i) s.denominator.push_back({pc(i), axis_mask(k, i)});
      break;
    case KindTag::GB:
      s.n_a = k; s.n_b = k; s.n_c = 1;
      for (int i = 0; i < k; ++i) s.numerator.push_back({pa(i), axis_mask(k, i)});
      for (int i = 0; i < k; ++i) s.numerator.push_back({pb(i), axis_mask(k, i)});
      s.denominator.push_back({pc(0), total_mask(k)});
      break;
    case KindTag::GC:
      s.n_a = 1; s.n_b = 1; s.n_c = k;
      s.numerator.push_back({pa(0), total_mask(k)});
      s.numerator.push_back({pb(0), total_mask(k)});
      for (int i = 0; i < k; ++i) s.denominator.push_back({pc(i), axis_mask(k, i)});
      break;
    case KindTag::GD:
      s.n_a = 1; s.n_b = k; s.n_c = 1;
      s.numerator.push_back({pa(0), total_mask(k)});
      for (int i = 0; i < k; ++i) s.numerator.push_back({pb(i), axis_mask(k, i)});
      s.denominator.push_back({pc(0), total_mask(k)});
      break;
    case KindTag::F3:
      s.n_a = 2; s.n_b = 2; s.n_c = 3;
      s.numerator = {{pa(0), axis_mask(3, 0)}, {pa(1), axes_mask(3, {1, 2})},
                     {pb(0), axes_mask(3, {0, 2})}, {pb(1), axis_mask(3, 1)}};
      s.denominator = {{pc(0), axis_mask(3, 0)}, {pc(1), axis_mask(3, 1)}, {pc(2), axis_mask(3, 2)}};
      break;
    case KindTag::F4:
      s.n_a = 1; s.n_b = 2; s.n_c = 3;
      s.numerator = {{pa(0), total_mask(3)}, {pb(0), axis_mask(3, 0)}, {pb(1), axes_mask(3, {1, 2})}};
      s.denominator = {{pc(0), axis_mask(3, 0)}, {pc(1), axis_mask(3, 1)}, {pc(2), axis_mask(3, 2)}};
      break;
    case KindTag::F6:
      s.n_a = 3; s.n_b = 2; s.n_c = 2;
      s.numerator = {{pa(0), axis_mask(3, 0)}, {pa(1), axis_mask(3, 1)}, {pa(2), axis_mask(3, 2)},
                     {pb(0), axes_mask(3, {0, 2})}, {pb(1), axis_mask(3, 1)}};
      s.denominator = {{pc(0), axis_mask(3, 0)}, {pc(1), axes_mask(3, {1, 2})}};
      break;
    case KindTag::F7:
      s.n_a = 2; s.n_b = 3; s.n_c = 1;
      s.numerator = {{pa(0), axis_mask(3, 0)}, {pa(1), axes_mask(3, {1, 2})},
                     {pb(0), axis_mask(3, 0)}, {pb(1), axis_mask(3, 1)}, {pb(2), axis_mask(3, 2)}};
      s.denominator = {{pc(0), total_mask(3)}};
      break;
    case KindTag::F8:
      s.n_a = 1; s.n_b = 3; s.n_c = 2;
      s.numerator = {{pa(0), total_mask(3)},
                     {pb(0), axis_mask(3, 0)}, {pb(1), axis_mask(3, 1)}, {pb(2), axis_mask(3, 2)}};
      s.denominator = {{pc(0), axis_mask(3, 0)}, {pc(1), axes_mask(3, {1, 2})}};
      break;
    case KindTag::F10:
      s.n_a = 2; s.n_b = 2; s.n_c = 2;
      s.numerator = {{pa(0), axes_mask(3, {0, 2})}, {pa(1), axis_mask(3, 1)},
                     {pb(0), axes_mask(3, {0, 2})}, {pb(1), axis_mask(3, 1)}};
      s.denominator = {{pc(0), axis_mask(3, 0)}, {pc(1), axes_mask(3, {1, 2})}};
      break;
    case KindTag::F11:
      s.n_a = 2; s.n_b = 2; s.n_c = 2;
      s.numerator = {{pa(0), axis_mask(3, 0)}, {pa(1), axes_mask(3, {1, 2})},
                     {pb(0), axes_mask(3, {0, 2})}, {pb(1), axis_mask(3, 1)}};
      s.denominator = {{pc(0), axis_mask(3, 0)}, {pc(1), axes_mask(3, {1, 2})}};
      break;
    case KindTag::F12:
      s.n_a = 2; s.n_b = 2; s.n_c = 2;
      s.numerator = {{pa(0), axes_mask(3, {0, 2})}, {pa(1), axis_mask(3, 1)},
                     {pb(0), axes_mask(3, {0, 1})}, {pb(1), axis_mask(3, 2)}};
      s.denominator = {{pc(0), axis_mask(3, 0)}, {pc(1), axes_mask(3, {1, 2})}};
      break;
    case KindTag::F13:
      s.n_a = 2; s.n_b = 2; s.n_c = 1;
      s.numerator = {{pa(0), axis_mask(3, 0)}, {pa(1), axes_mask(3, {1, 2})},
                     {pb(0), axes_mask(3, {0, 2})}, {pb(1), axis_mask(3, 1)}};
      s.denominator = {{pc(0), total_mask(3)}};
      break;
    case KindTag::F14:
      s.n_a = 1; s.n_b = 2; s.n_c = 2;
      s.numerator = {{pa(0), total_mask(3)}, {pb(0), axes_mask(3, {0, 2})}, {pb(1), axis_mask(3, 1)}};
      s.denominator = {{pc(0), axis_mask(3, 0)}, {pc(1), axes_mask(3, {1, 2})}};
      break;
  }
  return s;
}

bool three_variable_only(KindTag t) {
  return t != KindTag::GA && t != KindTag::GB && t != KindTag::GC && t != KindTag::GD;
}

} // namespace

LauricellaKind parse_kind(const std::string& name, int arity) {
  std::string u;
  for (char c : name) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));

  static const std::map<std::string, KindTag> general = {
      {"GA", KindTag::GA}, {"GB", KindTag::GB}, {"GC", KindTag::GC}, {"GD", KindTag::GD},
      {"FA", KindTag::GA}, {"FB", KindTag::GB}, {"FC", KindTag::GC}, {"FD", KindTag::GD}};
  if (auto it = general.find(u); it != general.end()) {
    if (arity < 1) throw InputError("kind " + name + ": arity must be >= 1");
    return {it->second, arity};
  }

  static const std::map<std::string, KindTag> threevar = {
      {"F1", KindTag::GA},  {"F2", KindTag::GB},  {"F5", KindTag::GC},  {"F9", KindTag::GD},
      {"F3", KindTag::F3},  {"F4", KindTag::F4},  {"F6", KindTag::F6},  {"F7", KindTag::F7},
      {"F8", KindTag::F8},  {"F10", KindTag::F10}, {"F11", KindTag::F11}, {"F12", KindTag::F12},
      {"F13", KindTag::F13}, {"F14", KindTag::F14}};
  if (auto it = threevar.find(u); it != threevar.end()) return {it->second, 3};
  throw InputError("unknown function kind: " + name);
}

std::string kind_name(const LauricellaKind& kind) { return tag_str(kind.tag); }

std::string kind_id_prefix(const LauricellaKind& kind) {
  switch (kind.tag) {
    case KindTag::GA: return "FA";
    case KindTag::GB: return "FB";
    case KindTag::GC: return "FC";
    case KindTag::GD: return "FD";
    default: return tag_str(kind.tag);
  }
}

const KindSignature& signature(const LauricellaKind& kind) {
  if (three_variable_only(kind.tag) && kind.arity != 3)
    throw InputError(tag_str(kind.tag) + " is a three-variable function");
  static std::map<std::pair<int, int>, KindSignature> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(kind.tag), kind.arity);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_signature(kind)).first;
  return it->second;
}

int ParameterSet::dim() const {
  for (const auto* v : {&a, &b, &c})
    if (!v->empty()) return v->front().dim();
  return 0;
}

const ComplexMatrix& ParameterSet::get(const ParamId& id) const {
  const std::vector<ComplexMatrix>* v =
      id.group == ParamGroup::A ? &a : id.group == ParamGroup::B ? &b : &c;
  if (id.index < 0 || id.index >= static_cast<int>(v->size()))
    throw InputError("parameter index out of range");
  return (*v)[static_cast<size_t>(id.index)];
}

ComplexMatrix& ParameterSet::get(const ParamId& id) {
  return const_cast<ComplexMatrix&>(static_cast<const ParameterSet&>(*this).get(id));
}

int group_size(const KindSignature& sig, ParamGroup g) {
  switch (g) {
    case ParamGroup::A: return sig.n_a;
    case ParamGroup::B: return sig.n_b;
    case ParamGroup::C: return sig.n_c;
  }
  return 0;
}

void validate_parameters(const LauricellaKind& kind, const ParameterSet& params) {
  const KindSignature& sig = signature(kind);
  if (static_cast<int>(params.a.size()) != sig.n_a ||
      static_cast<int>(params.b.size()) != sig.n_b ||
      static_cast<int>(params.c.size()) != sig.n_c)
    throw InputError(kind_name(kind) + " expects " + std::to_string(sig.n_a) + " A, " +
                     std::to_string(sig.n_b) + " B, " + std::to_string(sig.n_c) +
                     " C parameters; got " + std::to_string(params.a.size()) + "/" +
                     std::to_string(params.b.size()) + "/" + std::to_string(params.c.size()));
  const int d = params.dim();
  if (d < 1) throw InputError("empty parameter set");
  for (const auto* v : {&params.a, &params.b, &params.c})
    for (const ComplexMatrix& m : *v)
      if (m.dim() != d) throw DimensionError("parameter dimensions disagree");
}

std::string format_param(const LauricellaKind& kind, const ParamId& id) {
  const KindSignature& sig = signature(kind);
  const char letter = id.group == ParamGroup::A ? 'A' : id.group == ParamGroup::B ? 'B' : 'C';
  if (group_size(sig, id.group) == 1) return std::string(1, letter);
  return std::string(1, letter) + std::to_string(id.index + 1);
}

ParamId parse_param(const LauricellaKind& kind, const std::string& name) {
  if (name.empty()) throw InputError("empty parameter name");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  ParamGroup g;
  if (letter == 'A') g = ParamGroup::A;
  else if (letter == 'B') g = ParamGroup::B;
  else if (letter == 'C') g = ParamGroup::C;
  else throw InputError("unknown parameter group in '" + name + "'");
  const KindSignature& sig = signature(kind);
  int index = 0;
  if (name.size() > 1) {
    try {
      index = std::stoi(name.substr(1)) - 1;
    } catch (const std::exception&) {
      throw InputError("bad parameter name '" + name + "'");
    }
  }
  if (index < 0 || index >= group_size(sig, g))
    throw InputError("parameter '" + name + "' out of range for " + kind_name(kind));
  return {g, index};
}

} // namespace lauricella
