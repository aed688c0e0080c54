// Catalog entries for the four generalized k-variable families at k = 3.
// Each entry mirrors one source equation; ids read <kind>.<param>.<dir>.<form>.
#include "catalog_builder.hpp"

namespace lauricella::builder {

namespace {

const LauricellaKind GA3{KindTag::GA, 3};
const LauricellaKind GB3{KindTag::GB, 3};
const LauricellaKind GC3{KindTag::GC, 3};
const LauricellaKind GD3{KindTag::GD, 3};

std::string bsuf(int i) { return "B" + std::to_string(i); }
std::string asuf(int i) { return "A" + std::to_string(i); }
std::string csuf(int i) { return "C" + std::to_string(i); }

void append_fa(std::vector<IdentityEntry>& cat) {
  EntryBuilder b{&cat};
  const auto hyps_full = each_with({B(1), B(2), B(3)}, A()) +
                         pairs_within({B(1), B(2), B(3)}) + pairs_within({C(1), C(2), C(3)});
  const auto hyps_c_only = pairs_within({C(1), C(2), C(3)});

  // F_A[A + nI], unit-shift sum: one summed term per variable.
  {
    std::vector<RhsTerm> rhs{bare()};
    for (int i = 1; i <= 3; ++i)
      rhs.push_back(unit_raise(i, {plain(B(i))},
                               {Sh(A(), N1), Sh(B(i), 1), Sh(C(i), 1)}, {inv(C(i))}));
    b.add("FA.A.raise.unit", GA3, "c4eq1", raise(A()), rhs, hyps_full);

    std::vector<RhsTerm> rl{bare()};
    for (int i = 1; i <= 3; ++i)
      rl.push_back(unit_lower(i, {plain(B(i))},
                              {Sh(A(), -N1), Sh(B(i), 1), Sh(C(i), 1)}, {inv(C(i))}));
    b.add("FA.A.lower.unit", GA3, "c43eq2", lower(A()), rl, hyps_full);

    // Contiguous seeds: the n = 1 steps the recursions iterate.
    IdentityEntry& cr = b.add("FA.A.raise.contig", GA3, "c4meq1", raise(A()), rhs, hyps_full);
    cr.fixed_n = 1;
    IdentityEntry& cl = b.add("FA.A.lower.contig", GA3, "c4meq3", lower(A()), rl, hyps_full);
    cl.fixed_n = 1;
  }

  // F_A[A +- nI], closed multinomial form.
  b.add("FA.A.raise.multi", GA3, "c43eq3", raise(A()),
        {simplex(3, {{1, N1}, {2, N2}, {3, N3}}, false,
                 {poch(B(1), N1), poch(B(2), N2), poch(B(3), N3)},
                 {Sh(A(), N1 + N2 + N3), Sh(B(1), N1), Sh(B(2), N2), Sh(B(3), N3),
                  Sh(C(1), N1), Sh(C(2), N2), Sh(C(3), N3)},
                 {pinv(C(1), N1), pinv(C(2), N2), pinv(C(3), N3)})},
        hyps_full);
  b.add("FA.A.lower.multi", GA3, "c43eq4", lower(A()),
        {simplex(3, {{1, N1}, {2, N2}, {3, N3}}, true,
                 {poch(B(1), N1), poch(B(2), N2), poch(B(3), N3)},
                 {Sh(B(1), N1), Sh(B(2), N2), Sh(B(3), N3),
                  Sh(C(1), N1), Sh(C(2), N2), Sh(C(3), N3)},
                 {pinv(C(1), N1), pinv(C(2), N2), pinv(C(3), N3)})},
        hyps_full);

  // B_i shifts: the fixed A+I inside the sum is as printed.
  for (int i = 1; i <= 3; ++i) {
    b.add("FA." + bsuf(i) + ".raise.unit", GA3, "c43eq5", raise(B(i)),
          {bare(), unit_raise(i, {plain(A())},
                              {Sh(A(), 1), Sh(B(i), N1), Sh(C(i), 1)}, {inv(C(i))})},
          hyps_c_only);
    b.add("FA." + bsuf(i) + ".lower.unit", GA3, "c43eq6", lower(B(i)),
          {bare(), unit_lower(i, {plain(A())},
                              {Sh(A(), 1), Sh(B(i), -N1), Sh(C(i), 1)}, {inv(C(i))})},
          hyps_c_only);
    b.add("FA." + bsuf(i) + ".raise.binom", GA3, "c43eq7", raise(B(i)),
          {binom(i, false, {poch(A(), N1)},
                 {Sh(A(), N1), Sh(B(i), N1), Sh(C(i), N1)}, {pinv(C(i), N1)})},
          hyps_c_only);
    b.add("FA." + bsuf(i) + ".lower.binom", GA3, "c43eq8", lower(B(i)),
          {binom(i, true, {poch(A(), N1)},
                 {Sh(A(), N1), Sh(C(i), N1)}, {pinv(C(i), N1)})},
          hyps_c_only);
  }

  // C_i lowering.
  for (int i = 1; i <= 3; ++i)
    b.add("FA." + csuf(i) + ".lower.unit", GA3, "c43eq9", lower(C(i)),
          {bare(), c_lower(i, {plain(A()), plain(B(i))},
                           {Sh(A(), 1), Sh(B(i), 1), Sh(C(i), K(2) - N1)}, C(i))},
          hyps_full);
}

void append_fb(std::vector<IdentityEntry>& cat) {
  EntryBuilder b{&cat};
  std::vector<CommutePair> hyps_ab;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) hyps_ab.push_back(comm(A(i), B(j)));

  std::vector<std::string> a_ids;
  for (int i = 1; i <= 3; ++i) {
    a_ids.push_back("FB." + asuf(i) + ".raise.unit");
    b.add(a_ids.back(), GB3, "c43eq11", raise(A(i)),
          {bare(), unit_raise(i, {plain(B(i))},
                              {Sh(A(i), N1), Sh(B(i), 1), Sh(C(), 1)}, {inv(C())})},
          hyps_ab);
    a_ids.push_back("FB." + asuf(i) + ".lower.unit");
    b.add(a_ids.back(), GB3, "c43eq12", lower(A(i)),
          {bare(), unit_lower(i, {plain(B(i))},
                              {Sh(A(i), -N1), Sh(B(i), 1), Sh(C(), 1)}, {inv(C())})},
          hyps_ab);
    a_ids.push_back("FB." + asuf(i) + ".raise.binom");
    b.add(a_ids.back(), GB3, "c43eq13", raise(A(i)),
          {binom(i, false, {poch(B(i), N1)},
                 {Sh(A(i), N1), Sh(B(i), N1), Sh(C(), N1)}, {pinv(C(), N1)})},
          hyps_ab);
    a_ids.push_back("FB." + asuf(i) + ".lower.binom");
    b.add(a_ids.back(), GB3, "c43eq14", lower(A(i)),
          {binom(i, true, {poch(B(i), N1)},
                 {Sh(B(i), N1), Sh(C(), N1)}, {pinv(C(), N1)})},
          hyps_ab);
  }

  // C lowering, one summed term per variable.
  {
    std::vector<RhsTerm> rhs{bare()};
    for (int i = 1; i <= 3; ++i)
      rhs.push_back(c_lower(i, {plain(A(i)), plain(B(i))},
                            {Sh(A(i), 1), Sh(B(i), 1), Sh(C(), K(2) - N1)}, C()));
    b.add("FB.C.lower.unit", GB3, "c43eq15", lower(C()), rhs, hyps_ab);
    IdentityEntry& seed = b.add("FB.C.lower.contig", GB3, "c4aeq15", lower(C()), rhs, hyps_ab);
    seed.fixed_n = 1;
  }

  // B_i shifts arise from the A_i <-> B_i interchange remark.
  const std::vector<std::pair<ParamId, ParamId>> swap_ab{
      {A(1), B(1)}, {A(2), B(2)}, {A(3), B(3)}};
  for (const std::string& id : a_ids) {
    const IdentityEntry* src = nullptr;
    for (const IdentityEntry& e : cat)
      if (e.id == id) src = &e;
    std::string nid = id;
    nid.replace(nid.find(".A"), 2, ".B");
    cat.push_back(interchange(*src, swap_ab, nid));
  }
}

void append_fc(std::vector<IdentityEntry>& cat) {
  EntryBuilder b{&cat};
  const std::vector<CommutePair> hyps_ab{comm(A(), B())};
  const auto hyps_c = std::vector<CommutePair>{comm(A(), B())} + pairs_within({C(1), C(2), C(3)});

  std::vector<std::string> a_ids;
  {
    std::vector<RhsTerm> rhs{bare()};
    for (int i = 1; i <= 3; ++i)
      rhs.push_back(unit_raise(i, {plain(B())},
                               {Sh(A(), N1), Sh(B(), 1), Sh(C(i), 1)}, {inv(C(i))}));
    a_ids.push_back("FC.A.raise.unit");
    b.add(a_ids.back(), GC3, "c43eq16", raise(A()), rhs, hyps_ab);

    std::vector<RhsTerm> rl{bare()};
    for (int i = 1; i <= 3; ++i)
      rl.push_back(unit_lower(i, {plain(B())},
                              {Sh(A(), -N1), Sh(B(), 1), Sh(C(i), 1)}, {inv(C(i))}));
    a_ids.push_back("FC.A.lower.unit");
    b.add(a_ids.back(), GC3, "c43eq17", lower(A()), rl, hyps_ab);
  }
  a_ids.push_back("FC.A.raise.multi");
  b.add(a_ids.back(), GC3, "c43eq18", raise(A()),
        {simplex(3, {{1, N1}, {2, N2}, {3, N3}}, false, {poch(B(), N1 + N2 + N3)},
                 {Sh(A(), N1 + N2 + N3), Sh(B(), N1 + N2 + N3),
                  Sh(C(1), N1), Sh(C(2), N2), Sh(C(3), N3)},
                 {pinv(C(1), N1), pinv(C(2), N2), pinv(C(3), N3)})},
        hyps_ab);
  a_ids.push_back("FC.A.lower.multi");
  b.add(a_ids.back(), GC3, "c43eq19", lower(A()),
        {simplex(3, {{1, N1}, {2, N2}, {3, N3}}, true, {poch(B(), N1 + N2 + N3)},
                 {Sh(B(), N1 + N2 + N3), Sh(C(1), N1), Sh(C(2), N2), Sh(C(3), N3)},
                 {pinv(C(1), N1), pinv(C(2), N2), pinv(C(3), N3)})},
        hyps_ab);

  for (const std::string& id : a_ids) {
    const IdentityEntry* src = nullptr;
    for (const IdentityEntry& e : cat)
      if (e.id == id) src = &e;
    std::string nid = id;
    nid.replace(nid.find(".A."), 3, ".B.");
    cat.push_back(interchange(*src, {{A(), B()}}, nid));
  }

  for (int i = 1; i <= 3; ++i)
    b.add("FC." + csuf(i) + ".lower.unit", GC3, "c43eq20", lower(C(i)),
          {bare(), c_lower(i, {plain(A()), plain(B())},
                           {Sh(A(), 1), Sh(B(), 1), Sh(C(i), K(2) - N1)}, C(i))},
          hyps_c);
}

void append_fd(std::vector<IdentityEntry>& cat) {
  EntryBuilder b{&cat};
  const auto hyps_ab = each_with({B(1), B(2), B(3)}, A());

  {
    std::vector<RhsTerm> rhs{bare()};
    for (int i = 1; i <= 3; ++i)
      rhs.push_back(unit_raise(i, {plain(B(i))},
                               {Sh(A(), N1), Sh(B(i), 1), Sh(C(), 1)}, {inv(C())}));
    b.add("FD.A.raise.unit", GD3, "c43eq21", raise(A()), rhs, hyps_ab);

    std::vector<RhsTerm> rl{bare()};
    for (int i = 1; i <= 3; ++i)
      rl.push_back(unit_lower(i, {plain(B(i))},
                              {Sh(A(), -N1), Sh(B(i), 1), Sh(C(), 1)}, {inv(C())}));
    b.add("FD.A.lower.unit", GD3, "c43eq22", lower(A()), rl, hyps_ab);
  }
  b.add("FD.A.raise.multi", GD3, "c43eq23", raise(A()),
        {simplex(3, {{1, N1}, {2, N2}, {3, N3}}, false,
                 {poch(B(1), N1), poch(B(2), N2), poch(B(3), N3)},
                 {Sh(A(), N1 + N2 + N3), Sh(B(1), N1), Sh(B(2), N2), Sh(B(3), N3),
                  Sh(C(), N1 + N2 + N3)},
                 {pinv(C(), N1 + N2 + N3)})},
        hyps_ab);
  b.add("FD.A.lower.multi", GD3, "c43eq24", lower(A()),
        {simplex(3, {{1, N1}, {2, N2}, {3, N3}}, true,
                 {poch(B(1), N1), poch(B(2), N2), poch(B(3), N3)},
                 {Sh(B(1), N1), Sh(B(2), N2), Sh(B(3), N3), Sh(C(), N1 + N2 + N3)},
                 {pinv(C(), N1 + N2 + N3)})},
        hyps_ab);

  for (int i = 1; i <= 3; ++i) {
    b.add("FD." + bsuf(i) + ".raise.unit", GD3, "c43eq25", raise(B(i)),
          {bare(), unit_raise(i, {plain(A())},
                              {Sh(A(), 1), Sh(B(i), N1), Sh(C(), 1)}, {inv(C())})},
          {});
    b.add("FD." + bsuf(i) + ".lower.unit", GD3, "c43eq26", lower(B(i)),
          {bare(), unit_lower(i, {plain(A())},
                              {Sh(A(), 1), Sh(B(i), -N1), Sh(C(), 1)}, {inv(C())})},
          {});
    b.add("FD." + bsuf(i) + ".raise.binom", GD3, "c43eq27", raise(B(i)),
          {binom(i, false, {poch(A(), N1)},
                 {Sh(A(), N1), Sh(B(i), N1), Sh(C(), N1)}, {pinv(C(), N1)})},
          {});
    b.add("FD." + bsuf(i) + ".lower.binom", GD3, "c43eq28", lower(B(i)),
          {binom(i, true, {poch(A(), N1)}, {Sh(A(), N1), Sh(C(), N1)}, {pinv(C(), N1)})},
          {});
  }

  {
    std::vector<RhsTerm> rhs{bare()};
    for (int i = 1; i <= 3; ++i)
      rhs.push_back(c_lower(i, {plain(A()), plain(B(i))},
                            {Sh(A(), 1), Sh(B(i), 1), Sh(C(), K(2) - N1)}, C()));
    b.add("FD.C.lower.unit", GD3, "c43eq29", lower(C()), rhs, hyps_ab);
  }
}

} // namespace

void append_generalized(std::vector<IdentityEntry>& cat) {
  append_fa(cat);
  append_fb(cat);
  append_fc(cat);
  append_fd(cat);
}

} // namespace lauricella::builder
