// Catalog entries for the ten three-variable functions F3..F14 (F1, F2, F5
// and F9 route through the generalized families).  Where an equation fails
// numerical validation as printed, the entry carries the printed term list
// alongside the corrected one; the note names the discrepancy.
#include "catalog_builder.hpp"

namespace lauricella::builder {

namespace {

const LauricellaKind F3{KindTag::F3, 3};
const LauricellaKind F4{KindTag::F4, 3};
const LauricellaKind F6{KindTag::F6, 3};
const LauricellaKind F7{KindTag::F7, 3};
const LauricellaKind F8{KindTag::F8, 3};
const LauricellaKind F10{KindTag::F10, 3};
const LauricellaKind F11{KindTag::F11, 3};
const LauricellaKind F12{KindTag::F12, 3};
const LauricellaKind F13{KindTag::F13, 3};
const LauricellaKind F14{KindTag::F14, 3};

void append_f3(std::vector<IdentityEntry>& cat) {
  EntryBuilder b{&cat};
  const auto h_a1 = each_with({A(1), A(2)}, B(1)) +
                    std::vector<CommutePair>{comm(C(1), C(2)), comm(C(1), C(3))};
  const auto h_a2 = each_with({A(1), A(2)}, B(1)) +
                    each_with({C(1), C(2), C(3)}, B(2)) +
                    std::vector<CommutePair>{comm(C(2), C(3))};
  const auto h_b1 = std::vector<CommutePair>{comm(A(1), A(2)), comm(C(1), C(2)), comm(C(1), C(3))};
  const auto h_b2 = std::vector<CommutePair>{comm(A(1), A(2)), comm(C(2), C(3))};

  b.add("F3.A1.raise.unit", F3, "c43eq30", raise(A(1)),
        {bare(), unit_raise(1, {plain(B(1))}, {Sh(A(1), N1), Sh(B(1), 1), Sh(C(1), 1)},
                            {inv(C(1))})},
        h_a1);
  b.add("F3.A1.lower.unit", F3, "c43eq31", lower(A(1)),
        {bare(), unit_lower(1, {plain(B(1))}, {Sh(A(1), -N1), Sh(B(1), 1), Sh(C(1), 1)},
                            {inv(C(1))})},
        h_a1);
  b.add("F3.A1.raise.binom", F3, "c43eq32", raise(A(1)),
        {binom(1, false, {poch(B(1), N1)}, {Sh(A(1), N1), Sh(B(1), N1), Sh(C(1), N1)},
               {pinv(C(1), N1)})},
        h_a1);
  b.add("F3.A1.lower.binom", F3, "c43eq33", lower(A(1)),
        {binom(1, true, {poch(B(1), N1)}, {Sh(B(1), N1), Sh(C(1), N1)}, {pinv(C(1), N1)})},
        h_a1);

  b.add("F3.A2.raise.unit", F3, "c43eq34", raise(A(2)),
        {bare(),
         unit_raise(2, {}, {Sh(A(2), N1), Sh(B(2), 1), Sh(C(2), 1)}, {plain(B(2)), inv(C(2))}),
         unit_raise(3, {plain(B(1))}, {Sh(A(2), N1), Sh(B(1), 1), Sh(C(3), 1)}, {inv(C(3))})},
        h_a2);
  b.add("F3.A2.lower.unit", F3, "c43eq35", lower(A(2)),
        {bare(),
         unit_lower(2, {}, {Sh(A(2), -N1), Sh(B(2), 1), Sh(C(2), 1)}, {plain(B(2)), inv(C(2))}),
         unit_lower(3, {plain(B(1))}, {Sh(A(2), -N1), Sh(B(1), 1), Sh(C(3), 1)}, {inv(C(3))})},
        h_a2);
  b.add("F3.A2.raise.multi", F3, "c43eq36", raise(A(2)),
        {simplex(2, {{2, N1}, {3, N2}}, false, {poch(B(1), N2)},
                 {Sh(A(2), N1 + N2), Sh(B(1), N2), Sh(B(2), N1), Sh(C(2), N1), Sh(C(3), N2)},
                 {poch(B(2), N1), pinv(C(2), N1), pinv(C(3), N2)})},
        h_a2);
  b.add("F3.A2.lower.multi", F3, "c43eq37", lower(A(2)),
        {simplex(2, {{2, N1}, {3, N2}}, true, {poch(B(1), N2)},
                 {Sh(B(1), N2), Sh(B(2), N1), Sh(C(2), N1), Sh(C(3), N2)},
                 {poch(B(2), N1), pinv(C(2), N1), pinv(C(3), N2)})},
        h_a2);

  b.add("F3.B1.raise.unit", F3, "c43eq38", raise(B(1)),
        {bare(),
         unit_raise(1, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), N1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_raise(3, {plain(A(2))}, {Sh(A(2), 1), Sh(B(1), N1), Sh(C(3), 1)}, {inv(C(3))})},
        h_b1);
  b.add("F3.B1.lower.unit", F3, "c43eq39", lower(B(1)),
        {bare(),
         unit_lower(1, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), -N1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_lower(3, {plain(A(2))}, {Sh(A(2), 1), Sh(B(1), -N1), Sh(C(3), 1)}, {inv(C(3))})},
        h_b1);
  b.add("F3.B1.raise.multi", F3, "c43eq40", raise(B(1)),
        {simplex(2, {{1, N1}, {3, N2}}, false, {poch(A(1), N1), poch(A(2), N2)},
                 {Sh(A(1), N1), Sh(A(2), N2), Sh(B(1), N1 + N2), Sh(C(1), N1), Sh(C(3), N2)},
                 {pinv(C(1), N1), pinv(C(3), N2)})},
        h_b1);
  b.add("F3.B1.lower.multi", F3, "c43eq41", lower(B(1)),
        {simplex(2, {{1, N1}, {3, N2}}, true, {poch(A(1), N1), poch(A(2), N2)},
                 {Sh(A(1), N1), Sh(A(2), N2), Sh(C(1), N1), Sh(C(3), N2)},
                 {pinv(C(1), N1), pinv(C(3), N2)})},
        h_b1);

  b.add("F3.B2.raise.unit", F3, "c43eq42", raise(B(2)),
        {bare(),
         unit_raise(2, {plain(A(2))}, {Sh(A(2), 1), Sh(B(2), N1), Sh(C(2), 1)}, {inv(C(2))})},
        h_b2);
  b.add("F3.B2.lower.unit", F3, "c43eq43", lower(B(2)),
        {bare(),
         unit_lower(2, {plain(A(2))}, {Sh(A(2), 1), Sh(B(2), -N1), Sh(C(2), 1)}, {inv(C(2))})},
        h_b2);
  b.add("F3.B2.raise.binom", F3, "c43eq44", raise(B(2)),
        {binom(2, false, {poch(A(2), N1)}, {Sh(A(2), N1), Sh(B(2), N1), Sh(C(2), N1)},
               {pinv(C(2), N1)})},
        h_b2);
  b.add("F3.B2.lower.binom", F3, "c43eq45", lower(B(2)),
        {binom(2, true, {poch(A(2), N1)}, {Sh(A(2), N1), Sh(C(2), N1)}, {pinv(C(2), N1)})},
        h_b2);

  b.add("F3.C1.lower.unit", F3, "c43eq46", lower(C(1)),
        {bare(), c_lower(1, {plain(A(1)), plain(B(1))},
                         {Sh(A(1), 1), Sh(B(1), 1), Sh(C(1), K(2) - N1)}, C(1))},
        each_with({A(1), A(2)}, B(1)) + std::vector<CommutePair>{comm(C(1), C(2))});
  b.add("F3.C2.lower.unit", F3, "c43eq47", lower(C(2)),
        {bare(), c_lower(2, {plain(A(2))}, {Sh(A(2), 1), Sh(B(2), 1), Sh(C(2), K(2) - N1)},
                         C(2), {plain(B(2))})},
        std::vector<CommutePair>{comm(A(1), A(2))} + each_with({C(1), C(2), C(3)}, B(2)));
  b.add("F3.C3.lower.unit", F3, "c43eq48", lower(C(3)),
        {bare(), c_lower(3, {plain(A(2)), plain(B(1))},
                         {Sh(A(2), 1), Sh(B(1), 1), Sh(C(3), K(2) - N1)}, C(3))},
        std::vector<CommutePair>{comm(A(1), A(2))} + each_with({A(1), A(2)}, B(1)));
}

void append_f4(std::vector<IdentityEntry>& cat) {
  EntryBuilder b{&cat};
  const auto h_a1 = each_with({B(1), B(2)}, A(1)) +
                    std::vector<CommutePair>{comm(B(1), B(2))} +
                    pairs_within({C(1), C(2), C(3)});
  const auto h_b1 = std::vector<CommutePair>{comm(C(1), C(2)), comm(C(1), C(3))};
  const auto h_b2 = std::vector<CommutePair>{comm(C(2), C(3))};

  b.add("F4.A1.raise.unit", F4, "c43eq1", raise(A(1)),
        {bare(),
         unit_raise(1, {plain(B(1))}, {Sh(A(1), N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_raise(2, {plain(B(2))}, {Sh(A(1), N1), Sh(B(2), 1), Sh(C(2), 1)}, {inv(C(2))}),
         unit_raise(3, {plain(B(2))}, {Sh(A(1), N1), Sh(B(2), 1), Sh(C(3), 1)}, {inv(C(3))})},
        h_a1);
  b.add("F4.A1.lower.unit", F4, "c43eq49", lower(A(1)),
        {bare(),
         unit_lower(1, {plain(B(1))}, {Sh(A(1), -N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_lower(2, {plain(B(2))}, {Sh(A(1), -N1), Sh(B(2), 1), Sh(C(2), 1)}, {inv(C(2))}),
         unit_lower(3, {plain(B(2))}, {Sh(A(1), -N1), Sh(B(2), 1), Sh(C(3), 1)}, {inv(C(3))})},
        h_a1);

  {
    // Printed form shifts A1 by N_2 = n_1 + n_2 only; the induction pattern
    // and the scalar check require the full N_3.
    auto make = [&](LinExpr a_shift) {
      return std::vector<RhsTerm>{simplex(
          3, {{1, N1}, {2, N2}, {3, N3}}, false, {poch(B(1), N1), poch(B(2), N2 + N3)},
          {Sh(A(1), a_shift), Sh(B(1), N1), Sh(B(2), N2 + N3),
           Sh(C(1), N1), Sh(C(2), N2), Sh(C(3), N3)},
          {pinv(C(1), N1), pinv(C(2), N2), pinv(C(3), N3)})};
    };
    IdentityEntry& e = b.add("F4.A1.raise.multi", F4, "c43eq50", raise(A(1)),
                             make(N1 + N2 + N3), h_a1);
    e.printed_rhs = make(N1 + N2);
    e.note = "c43eq50 prints F_4[A_1+N_2 I, ...]; the multinomial recursion needs A_1+N_3 I";
  }
  b.add("F4.A1.lower.multi", F4, "c43eq51", lower(A(1)),
        {simplex(3, {{1, N1}, {2, N2}, {3, N3}}, true, {poch(B(1), N1), poch(B(2), N2 + N3)},
                 {Sh(B(1), N1), Sh(B(2), N2 + N3), Sh(C(1), N1), Sh(C(2), N2), Sh(C(3), N3)},
                 {pinv(C(1), N1), pinv(C(2), N2), pinv(C(3), N3)})},
        h_a1);

  b.add("F4.B1.raise.unit", F4, "c43eq52", raise(B(1)),
        {bare(),
         unit_raise(1, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), N1), Sh(C(1), 1)}, {inv(C(1))})},
        h_b1);
  b.add("F4.B1.lower.unit", F4, "c43eq53", lower(B(1)),
        {bare(),
         unit_lower(1, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), -N1), Sh(C(1), 1)}, {inv(C(1))})},
        h_b1);
  b.add("F4.B1.raise.binom", F4, "c43eq54", raise(B(1)),
        {binom(1, false, {poch(A(1), N1)}, {Sh(A(1), N1), Sh(B(1), N1), Sh(C(1), N1)},
               {pinv(C(1), N1)})},
        h_b1);
  b.add("F4.B1.lower.binom", F4, "c43eq55", lower(B(1)),
        {binom(1, true, {poch(A(1), N1)}, {Sh(A(1), N1), Sh(C(1), N1)}, {pinv(C(1), N1)})},
        h_b1);

  b.add("F4.B2.raise.unit", F4, "c43eq56", raise(B(2)),
        {bare(),
         unit_raise(2, {plain(A(1))}, {Sh(A(1), 1), Sh(B(2), N1), Sh(C(2), 1)}, {inv(C(2))}),
         unit_raise(3, {plain(A(1))}, {Sh(A(1), 1), Sh(B(2), N1), Sh(C(3), 1)}, {inv(C(3))})},
        h_b2);
  b.add("F4.B2.lower.unit", F4, "c43eq57", lower(B(2)),
        {bare(),
         unit_lower(2, {plain(A(1))}, {Sh(A(1), 1), Sh(B(2), -N1), Sh(C(2), 1)}, {inv(C(2))}),
         unit_lower(3, {plain(A(1))}, {Sh(A(1), 1), Sh(B(2), -N1), Sh(C(3), 1)}, {inv(C(3))})},
        h_b2);
  b.add("F4.B2.raise.multi", F4, "c43eq58", raise(B(2)),
        {simplex(2, {{2, N1}, {3, N2}}, false, {poch(A(1), N1 + N2)},
                 {Sh(A(1), N1 + N2), Sh(B(2), N1 + N2), Sh(C(2), N1), Sh(C(3), N2)},
                 {pinv(C(2), N1), pinv(C(3), N2)})},
        h_b2);
  b.add("F4.B2.lower.multi", F4, "c43eq59", lower(B(2)),
        {simplex(2, {{2, N1}, {3, N2}}, true, {poch(A(1), N1 + N2)},
                 {Sh(A(1), N1 + N2), Sh(C(2), N1), Sh(C(3), N2)},
                 {pinv(C(2), N1), pinv(C(3), N2)})},
        h_b2);

  b.add("F4.C1.lower.unit", F4, "c43eq60", lower(C(1)),
        {bare(), c_lower(1, {plain(A(1)), plain(B(1))},
                         {Sh(A(1), 1), Sh(B(1), 1), Sh(C(1), K(2) - N1)}, C(1))},
        std::vector<CommutePair>{comm(A(1), B(1)), comm(C(1), C(2)), comm(C(1), C(3))});
  b.add("F4.C2.lower.unit", F4, "c43eq61", lower(C(2)),
        {bare(), c_lower(2, {plain(A(1))}, {Sh(A(1), 1), Sh(B(2), 1), Sh(C(2), K(2) - N1)},
                         C(2), {plain(B(2))})},
        each_with({C(1), C(2), C(3)}, B(2)) + std::vector<CommutePair>{comm(C(2), C(3))});
  b.add("F4.C3.lower.unit", F4, "c43eq62", lower(C(3)),
        {bare(), c_lower(3, {plain(A(1))}, {Sh(A(1), 1), Sh(B(2), 1), Sh(C(3), K(2) - N1)},
                         C(3), {plain(B(2))})},
        each_with({C(1), C(2), C(3)}, B(2)));
}

void append_f6(std::vector<IdentityEntry>& cat) {
  EntryBuilder b{&cat};
  const auto h_a1 = each_with({A(1), A(2), A(3)}, B(1)) +
                    std::vector<CommutePair>{comm(C(1), C(2))};
  const auto h_a2 = each_with({C(1), C(2)}, B(2));
  const auto h_a3 = each_with({A(1), A(2), A(3)}, B(1));
  const auto h_b1 = std::vector<CommutePair>{comm(A(1), A(3)), comm(A(2), A(3)),
                                             comm(C(1), C(2))};
  const auto h_b2 = std::vector<CommutePair>{comm(A(1), A(2))};

  b.add("F6.A1.raise.unit", F6, "c43eq63", raise(A(1)),
        {bare(),
         unit_raise(1, {plain(B(1))}, {Sh(A(1), N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))})},
        h_a1);
  b.add("F6.A1.lower.unit", F6, "c43eq64", lower(A(1)),
        {bare(),
         unit_lower(1, {plain(B(1))}, {Sh(A(1), -N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))})},
        h_a1);
  b.add("F6.A1.raise.binom", F6, "c43eq65", raise(A(1)),
        {binom(1, false, {poch(B(1), N1)}, {Sh(A(1), N1), Sh(B(1), N1), Sh(C(1), N1)},
               {pinv(C(1), N1)})},
        h_a1);
  b.add("F6.A1.lower.binom", F6, "c43eq66", lower(A(1)),
        {binom(1, true, {poch(B(1), N1)}, {Sh(B(1), N1), Sh(C(1), N1)}, {pinv(C(1), N1)})},
        h_a1);

  b.add("F6.A2.raise.unit", F6, "c43eq67", raise(A(2)),
        {bare(),
         unit_raise(2, {}, {Sh(A(2), N1), Sh(B(2), 1), Sh(C(2), 1)}, {plain(B(2)), inv(C(2))})},
        h_a2);
  b.add("F6.A2.lower.unit", F6, "c43eq68", lower(A(2)),
        {bare(),
         unit_lower(2, {}, {Sh(A(2), -N1), Sh(B(2), 1), Sh(C(2), 1)}, {plain(B(2)), inv(C(2))})},
        h_a2);
  {
    // Printed right factor is (C_1)^{-1}_{n_1}; axis 2 pairs B_2 with C_2.
    auto make = [&](ParamId cslot) {
      return std::vector<RhsTerm>{binom(2, false, {},
                                        {Sh(A(2), N1), Sh(B(2), N1), Sh(C(2), N1)},
                                        {poch(B(2), N1), pinv(cslot, N1)})};
    };
    IdentityEntry& e = b.add("F6.A2.raise.binom", F6, "c43eq69", raise(A(2)), make(C(2)), h_a2);
    e.printed_rhs = make(C(1));
    e.note = "c43eq69 prints (C_1)^{-1}_{n_1}; the A_2 axis carries C_2";
  }
  {
    auto make = [&](ParamId cslot) {
      return std::vector<RhsTerm>{binom(2, true, {}, {Sh(B(2), N1), Sh(C(2), N1)},
                                        {poch(B(2), N1), pinv(cslot, N1)})};
    };
    IdentityEntry& e = b.add("F6.A2.lower.binom", F6, "c43eq70", lower(A(2)), make(C(2)), h_a2);
    e.printed_rhs = make(C(1));
    e.note = "c43eq70 prints (C_1)^{-1}_{n_1}; the A_2 axis carries C_2";
  }

  b.add("F6.A3.raise.unit", F6, "c43eq71", raise(A(3)),
        {bare(),
         unit_raise(3, {plain(B(1))}, {Sh(A(3), N1), Sh(B(1), 1), Sh(C(2), 1)}, {inv(C(2))})},
        h_a3);
  b.add("F6.A3.lower.unit", F6, "c43eq72", lower(A(3)),
        {bare(),
         unit_lower(3, {plain(B(1))}, {Sh(A(3), -N1), Sh(B(1), 1), Sh(C(2), 1)}, {inv(C(2))})},
        h_a3);
  b.add("F6.A3.raise.binom", F6, "c43eq73", raise(A(3)),
        {binom(3, false, {poch(B(1), N1)}, {Sh(A(3), N1), Sh(B(1), N1), Sh(C(2), N1)},
               {pinv(C(2), N1)})},
        h_a3);
  b.add("F6.A3.lower.binom", F6, "c43eq74", lower(A(3)),
        {binom(3, true, {poch(B(1), N1)}, {Sh(B(1), N1), Sh(C(2), N1)}, {pinv(C(2), N1)})},
        h_a3);

  b.add("F6.B1.raise.unit", F6, "c43eq75", raise(B(1)),
        {bare(),
         unit_raise(1, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), N1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_raise(3, {plain(A(3))}, {Sh(A(3), 1), Sh(B(1), N1), Sh(C(2), 1)}, {inv(C(2))})},
        h_b1);
  b.add("F6.B1.lower.unit", F6, "c43eq76", lower(B(1)),
        {bare(),
         unit_lower(1, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), -N1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_lower(3, {plain(A(3))}, {Sh(A(3), 1), Sh(B(1), -N1), Sh(C(2), 1)}, {inv(C(2))})},
        h_b1);
  b.add("F6.B1.raise.multi", F6, "c43eq77", raise(B(1)),
        {simplex(2, {{1, N1}, {3, N2}}, false, {poch(A(1), N1), poch(A(3), N2)},
                 {Sh(A(1), N1), Sh(A(3), N2), Sh(B(1), N1 + N2), Sh(C(1), N1), Sh(C(2), N2)},
                 {pinv(C(1), N1), pinv(C(2), N2)})},
        h_b1);
  b.add("F6.B1.lower.multi", F6, "c43eq78", lower(B(1)),
        {simplex(2, {{1, N1}, {3, N2}}, true, {poch(A(1), N1), poch(A(3), N2)},
                 {Sh(A(1), N1), Sh(A(3), N2), Sh(C(1), N1), Sh(C(2), N2)},
                 {pinv(C(1), N1), pinv(C(2), N2)})},
        h_b1);

  b.add("F6.B2.raise.unit", F6, "c43eq79", raise(B(2)),
        {bare(),
         unit_raise(2, {plain(A(2))}, {Sh(A(2), 1), Sh(B(2), N1), Sh(C(2), 1)}, {inv(C(2))})},
        h_b2);
  b.add("F6.B2.lower.unit", F6, "c43eq80", lower(B(2)),
        {bare(),
         unit_lower(2, {plain(A(2))}, {Sh(A(2), 1), Sh(B(2), -N1), Sh(C(2), 1)}, {inv(C(2))})},
        h_b2);
  b.add("F6.B2.raise.binom", F6, "c43eq81", raise(B(2)),
        {binom(2, false, {poch(A(2), N1)}, {Sh(A(2), N1), Sh(B(2), N1), Sh(C(2), N1)},
               {pinv(C(2), N1)})},
        h_b2);
  b.add("F6.B2.lower.binom", F6, "c43eq82", lower(B(2)),
        {binom(2, true, {poch(A(2), N1)}, {Sh(A(2), N1), Sh(C(2), N1)}, {pinv(C(2), N1)})},
        h_b2);

  b.add("F6.C1.lower.unit", F6, "c43eq83", lower(C(1)),
        {bare(), c_lower(1, {plain(A(1)), plain(B(1))},
                         {Sh(A(1), 1), Sh(B(1), 1), Sh(C(1), K(2) - N1)}, C(1))},
        each_with({A(1), A(2), A(3)}, B(1)) + std::vector<CommutePair>{comm(C(1), C(2))});
  b.add("F6.C2.lower.unit", F6, "c43eq84", lower(C(2)),
        {bare(),
         c_lower(2, {plain(A(2))}, {Sh(A(2), 1), Sh(B(2), 1), Sh(C(2), K(2) - N1)}, C(2),
                 {plain(B(2))}),
         c_lower(3, {plain(A(3)), plain(B(1))}, {Sh(A(3), 1), Sh(B(1), 1), Sh(C(2), K(2) - N1)},
                 C(2))},
        std::vector<CommutePair>{comm(A(1), A(2)), comm(A(1), A(3)), comm(A(2), A(3))} +
            each_with({C(1), C(2)}, B(2)) + each_with({A(1), A(2), A(3)}, B(1)));
}

void append_f7(std::vector<IdentityEntry>& cat) {
  EntryBuilder b{&cat};
  const auto h_a1 = each_with({A(1), A(2)}, B(1));
  const auto h_a2 = each_with({A(1), A(2)}, B(2)) +
                    std::vector<CommutePair>{comm(B(1), B(2)), comm(C(1), B(3))};
  const auto h_b23 = std::vector<CommutePair>{comm(A(1), A(2))};

  b.add("F7.A1.raise.unit", F7, "c43eq85", raise(A(1)),
        {bare(),
         unit_raise(1, {plain(B(1))}, {Sh(A(1), N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))})},
        h_a1);
  b.add("F7.A1.lower.unit", F7, "c43eq86", lower(A(1)),
        {bare(),
         unit_lower(1, {plain(B(1))}, {Sh(A(1), -N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))})},
        h_a1);
  b.add("F7.A1.raise.binom", F7, "c43eq87", raise(A(1)),
        {binom(1, false, {poch(B(1), N1)}, {Sh(A(1), N1), Sh(B(1), N1), Sh(C(1), N1)},
               {pinv(C(1), N1)})},
        h_a1);
  b.add("F7.A1.lower.binom", F7, "c43eq88", lower(A(1)),
        {binom(1, true, {poch(B(1), N1)}, {Sh(B(1), N1), Sh(C(1), N1)}, {pinv(C(1), N1)})},
        h_a1);

  b.add("F7.A2.raise.unit", F7, "c43eq89", raise(A(2)),
        {bare(),
         unit_raise(2, {plain(B(2))}, {Sh(A(2), N1), Sh(B(2), 1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_raise(3, {}, {Sh(A(2), N1), Sh(B(3), 1), Sh(C(1), 1)}, {plain(B(3)), inv(C(1))})},
        h_a2);
  b.add("F7.A2.lower.unit", F7, "c43eq90", lower(A(2)),
        {bare(),
         unit_lower(2, {plain(B(2))}, {Sh(A(2), -N1), Sh(B(2), 1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_lower(3, {}, {Sh(A(2), -N1), Sh(B(3), 1), Sh(C(1), 1)}, {plain(B(3)), inv(C(1))})},
        h_a2);
  b.add("F7.A2.raise.multi", F7, "c43eq91", raise(A(2)),
        {simplex(2, {{2, N1}, {3, N2}}, false, {poch(B(2), N1)},
                 {Sh(A(2), N1 + N2), Sh(B(2), N1), Sh(B(3), N2), Sh(C(1), N1 + N2)},
                 {poch(B(3), N2), pinv(C(1), N1 + N2)})},
        h_a2);
  b.add("F7.A2.lower.multi", F7, "c43eq92", lower(A(2)),
        {simplex(2, {{2, N1}, {3, N2}}, true, {poch(B(2), N1)},
                 {Sh(B(2), N1), Sh(B(3), N2), Sh(C(1), N1 + N2)},
                 {poch(B(3), N2), pinv(C(1), N1 + N2)})},
        h_a2);

  b.add("F7.B1.raise.unit", F7, "c43eq93", raise(B(1)),
        {bare(),
         unit_raise(1, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), N1), Sh(C(1), 1)}, {inv(C(1))})},
        {});
  b.add("F7.B1.lower.unit", F7, "c43eq94", lower(B(1)),
        {bare(),
         unit_lower(1, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), -N1), Sh(C(1), 1)}, {inv(C(1))})},
        {});
  b.add("F7.B1.raise.binom", F7, "c43eq95", raise(B(1)),
        {binom(1, false, {poch(A(1), N1)}, {Sh(A(1), N1), Sh(B(1), N1), Sh(C(1), N1)},
               {pinv(C(1), N1)})},
        {});
  b.add("F7.B1.lower.binom", F7, "c43eq96", lower(B(1)),
        {binom(1, true, {poch(A(1), N1)}, {Sh(A(1), N1), Sh(C(1), N1)}, {pinv(C(1), N1)})},
        {});

  for (int i = 2; i <= 3; ++i) {
    const std::string base = "F7.B" + std::to_string(i);
    b.add(base + ".raise.unit", F7, "c43eq97", raise(B(i)),
          {bare(),
           unit_raise(i, {plain(A(2))}, {Sh(A(2), 1), Sh(B(i), N1), Sh(C(1), 1)}, {inv(C(1))})},
          h_b23);
    b.add(base + ".lower.unit", F7, "c43eq98", lower(B(i)),
          {bare(),
           unit_lower(i, {plain(A(2))}, {Sh(A(2), 1), Sh(B(i), -N1), Sh(C(1), 1)}, {inv(C(1))})},
          h_b23);
    b.add(base + ".raise.binom", F7, "c43eq99", raise(B(i)),
          {binom(i, false, {poch(A(2), N1)}, {Sh(A(2), N1), Sh(B(i), N1), Sh(C(1), N1)},
                 {pinv(C(1), N1)})},
          h_b23);
    b.add(base + ".lower.binom", F7, "c43eq100", lower(B(i)),
          {binom(i, true, {poch(A(2), N1)}, {Sh(A(2), N1), Sh(C(1), N1)}, {pinv(C(1), N1)})},
          h_b23);
  }

  b.add("F7.C1.lower.unit", F7, "c43eq101", lower(C(1)),
        {bare(),
         c_lower(1, {plain(A(1)), plain(B(1))}, {Sh(A(1), 1), Sh(B(1), 1), Sh(C(1), K(2) - N1)},
                 C(1)),
         c_lower(2, {plain(A(2))}, {Sh(A(2), 1), Sh(B(2), 1), Sh(C(1), K(2) - N1)}, C(1),
                 {plain(B(2))}),
         c_lower(3, {plain(A(2))}, {Sh(A(2), 1), Sh(B(3), 1), Sh(C(1), K(2) - N1)}, C(1),
                 {plain(B(3))})},
        std::vector<CommutePair>{comm(A(1), A(2))} + each_with({A(1), A(2)}, B(1)) +
            std::vector<CommutePair>{comm(B(2), C(1)), comm(B(3), C(1))});
}

void append_f8(std::vector<IdentityEntry>& cat) {
  EntryBuilder b{&cat};
  const auto h_a1 = each_with({B(1), B(2), B(3)}, A(1)) + pairs_within({B(1), B(2), B(3)}) +
                    std::vector<CommutePair>{comm(C(1), C(2))};
  const auto h_b1 = std::vector<CommutePair>{comm(C(1), C(2))};

  b.add("F8.A1.raise.unit", F8, "c43eq103", raise(A(1)),
        {bare(),
         unit_raise(1, {plain(B(1))}, {Sh(A(1), N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_raise(2, {plain(B(2))}, {Sh(A(1), N1), Sh(B(2), 1), Sh(C(2), 1)}, {inv(C(2))}),
         unit_raise(3, {plain(B(3))}, {Sh(A(1), N1), Sh(B(3), 1), Sh(C(2), 1)}, {inv(C(2))})},
        h_a1);
  b.add("F8.A1.lower.unit", F8, "c43eq102", lower(A(1)),
        {bare(),
         unit_lower(1, {plain(B(1))}, {Sh(A(1), -N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_lower(2, {plain(B(2))}, {Sh(A(1), -N1), Sh(B(2), 1), Sh(C(2), 1)}, {inv(C(2))}),
         unit_lower(3, {plain(B(3))}, {Sh(A(1), -N1), Sh(B(3), 1), Sh(C(2), 1)}, {inv(C(2))})},
        h_a1);
  b.add("F8.A1.raise.multi", F8, "c43eq104", raise(A(1)),
        {simplex(3, {{1, N1}, {2, N2}, {3, N3}}, false,
                 {poch(B(1), N1), poch(B(2), N2), poch(B(3), N3)},
                 {Sh(A(1), N1 + N2 + N3), Sh(B(1), N1), Sh(B(2), N2), Sh(B(3), N3),
                  Sh(C(1), N1), Sh(C(2), N2 + N3)},
                 {pinv(C(1), N1), pinv(C(2), N2 + N3)})},
        h_a1);
  b.add("F8.A1.lower.multi", F8, "c43eq105", lower(A(1)),
        {simplex(3, {{1, N1}, {2, N2}, {3, N3}}, true,
                 {poch(B(1), N1), poch(B(2), N2), poch(B(3), N3)},
                 {Sh(B(1), N1), Sh(B(2), N2), Sh(B(3), N3), Sh(C(1), N1), Sh(C(2), N2 + N3)},
                 {pinv(C(1), N1), pinv(C(2), N2 + N3)})},
        h_a1);

  b.add("F8.B1.raise.unit", F8, "c43eq106", raise(B(1)),
        {bare(),
         unit_raise(1, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), N1), Sh(C(1), 1)}, {inv(C(1))})},
        h_b1);
  b.add("F8.B1.lower.unit", F8, "c43eq107", lower(B(1)),
        {bare(),
         unit_lower(1, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), -N1), Sh(C(1), 1)}, {inv(C(1))})},
        h_b1);
  b.add("F8.B1.raise.binom", F8, "c43eq108", raise(B(1)),
        {binom(1, false, {poch(A(1), N1)}, {Sh(A(1), N1), Sh(B(1), N1), Sh(C(1), N1)},
               {pinv(C(1), N1)})},
        h_b1);
  b.add("F8.B1.lower.binom", F8, "c43eq109", lower(B(1)),
        {binom(1, true, {poch(A(1), N1)}, {Sh(A(1), N1), Sh(C(1), N1)}, {pinv(C(1), N1)})},
        h_b1);

  for (int i = 2; i <= 3; ++i) {
    const std::string base = "F8.B" + std::to_string(i);
    b.add(base + ".raise.unit", F8, "c43eq110", raise(B(i)),
          {bare(),
           unit_raise(i, {plain(A(1))}, {Sh(A(1), 1), Sh(B(i), N1), Sh(C(2), 1)}, {inv(C(2))})},
          {});
    b.add(base + ".lower.unit", F8, "c43eq111", lower(B(i)),
          {bare(),
           unit_lower(i, {plain(A(1))}, {Sh(A(1), 1), Sh(B(i), -N1), Sh(C(2), 1)}, {inv(C(2))})},
          {});
    b.add(base + ".raise.binom", F8, "c43eq112", raise(B(i)),
          {binom(i, false, {poch(A(1), N1)}, {Sh(A(1), N1), Sh(B(i), N1), Sh(C(2), N1)},
                 {pinv(C(2), N1)})},
          {});
    b.add(base + ".lower.binom", F8, "c43eq113", lower(B(i)),
          {binom(i, true, {poch(A(1), N1)}, {Sh(A(1), N1), Sh(C(2), N1)}, {pinv(C(2), N1)})},
          {});
  }

  b.add("F8.C1.lower.unit", F8, "c43eq114", lower(C(1)),
        {bare(), c_lower(1, {plain(A(1)), plain(B(1))},
                         {Sh(A(1), 1), Sh(B(1), 1), Sh(C(1), K(2) - N1)}, C(1))},
        {comm(A(1), B(1))});
  b.add("F8.C2.lower.unit", F8, "c43eq115", lower(C(2)),
        {bare(),
         c_lower(2, {plain(A(1)), plain(B(2))}, {Sh(A(1), 1), Sh(B(2), 1), Sh(C(2), K(2) - N1)},
                 C(2)),
         c_lower(3, {plain(A(1))}, {Sh(A(1), 1), Sh(B(3), 1), Sh(C(2), K(2) - N1)}, C(2),
                 {plain(B(3))})},
        std::vector<CommutePair>{comm(A(1), B(2)), comm(B(1), B(2)), comm(B(3), C(1)),
                                 comm(B(3), C(2))});
}

void append_f10(std::vector<IdentityEntry>& cat) {
  EntryBuilder b{&cat};
  const auto h_a1 = each_with({A(1), A(2)}, B(1)) + std::vector<CommutePair>{comm(C(1), C(2))};
  const auto h_a2 = each_with({C(1), C(2)}, B(2));

  std::vector<std::string> a1_ids, a2_ids;
  a1_ids.push_back("F10.A1.raise.unit");
  b.add(a1_ids.back(), F10, "c43eq116", raise(A(1)),
        {bare(),
         unit_raise(1, {plain(B(1))}, {Sh(A(1), N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_raise(3, {plain(B(1))}, {Sh(A(1), N1), Sh(B(1), 1), Sh(C(2), 1)}, {inv(C(2))})},
        h_a1);
  a1_ids.push_back("F10.A1.lower.unit");
  b.add(a1_ids.back(), F10, "c43eq117", lower(A(1)),
        {bare(),
         unit_lower(1, {plain(B(1))}, {Sh(A(1), -N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_lower(3, {plain(B(1))}, {Sh(A(1), -N1), Sh(B(1), 1), Sh(C(2), 1)}, {inv(C(2))})},
        h_a1);
  a1_ids.push_back("F10.A1.raise.multi");
  b.add(a1_ids.back(), F10, "c43eq118", raise(A(1)),
        {simplex(2, {{1, N1}, {3, N2}}, false, {poch(B(1), N1 + N2)},
                 {Sh(A(1), N1 + N2), Sh(B(1), N1 + N2), Sh(C(1), N1), Sh(C(2), N2)},
                 {pinv(C(1), N1), pinv(C(2), N2)})},
        h_a1);
  a1_ids.push_back("F10.A1.lower.multi");
  b.add(a1_ids.back(), F10, "c43eq119", lower(A(1)),
        {simplex(2, {{1, N1}, {3, N2}}, true, {poch(B(1), N1 + N2)},
                 {Sh(B(1), N1 + N2), Sh(C(1), N1), Sh(C(2), N2)},
                 {pinv(C(1), N1), pinv(C(2), N2)})},
        h_a1);

  a2_ids.push_back("F10.A2.raise.unit");
  b.add(a2_ids.back(), F10, "c43eq120", raise(A(2)),
        {bare(),
         unit_raise(2, {}, {Sh(A(2), N1), Sh(B(2), 1), Sh(C(2), 1)}, {plain(B(2)), inv(C(2))})},
        h_a2);
  {
    // Printed summand shifts A_2 by +n_1 inside the lowering sum.
    auto make = [&](LinExpr a_shift) {
      return std::vector<RhsTerm>{bare(), unit_lower(2, {},
                                                     {Sh(A(2), a_shift), Sh(B(2), 1), Sh(C(2), 1)},
                                                     {plain(B(2)), inv(C(2))})};
    };
    a2_ids.push_back("F10.A2.lower.unit");
    IdentityEntry& e = b.add(a2_ids.back(), F10, "c43eq121", lower(A(2)), make(-N1), h_a2);
    e.printed_rhs = make(N1);
    e.note = "c43eq121 prints F_10[A_2+n_1 I, ...] in a lowering sum; the step is A_2-n_1 I";
  }
  a2_ids.push_back("F10.A2.raise.binom");
  b.add(a2_ids.back(), F10, "c43eq122", raise(A(2)),
        {binom(2, false, {}, {Sh(A(2), N1), Sh(B(2), N1), Sh(C(2), N1)},
               {poch(B(2), N1), pinv(C(2), N1)})},
        h_a2);
  a2_ids.push_back("F10.A2.lower.binom");
  b.add(a2_ids.back(), F10, "c43eq123", lower(A(2)),
        {binom(2, true, {}, {Sh(B(2), N1), Sh(C(2), N1)}, {poch(B(2), N1), pinv(C(2), N1)})},
        h_a2);

  // B_1 and B_2 formulas come from the stated interchanges.
  for (const std::string& id : a1_ids) {
    const IdentityEntry* src = nullptr;
    for (const IdentityEntry& e : cat)
      if (e.id == id) src = &e;
    std::string nid = id;
    nid.replace(nid.find(".A1."), 4, ".B1.");
    cat.push_back(interchange(*src, {{A(1), B(1)}}, nid));
  }
  for (const std::string& id : a2_ids) {
    const IdentityEntry* src = nullptr;
    for (const IdentityEntry& e : cat)
      if (e.id == id) src = &e;
    std::string nid = id;
    nid.replace(nid.find(".A2."), 4, ".B2.");
    cat.push_back(interchange(*src, {{A(2), B(2)}}, nid));
  }

  b.add("F10.C1.lower.unit", F10, "c43eq124", lower(C(1)),
        {bare(), c_lower(1, {plain(A(1)), plain(B(1))},
                         {Sh(A(1), 1), Sh(B(1), 1), Sh(C(1), K(2) - N1)}, C(1))},
        each_with({A(1), A(2)}, B(1)));
  b.add("F10.C2.lower.unit", F10, "c43eq125", lower(C(2)),
        {bare(),
         c_lower(2, {plain(A(2))}, {Sh(A(2), 1), Sh(B(2), 1), Sh(C(2), K(2) - N1)}, C(2),
                 {plain(B(2))}),
         c_lower(3, {plain(A(1)), plain(B(1))}, {Sh(A(1), 1), Sh(B(1), 1), Sh(C(2), K(2) - N1)},
                 C(2))},
        std::vector<CommutePair>{comm(A(1), A(2))} + each_with({A(1), A(2)}, B(1)) +
            each_with({C(1), C(2)}, B(2)));
}

void append_f11(std::vector<IdentityEntry>& cat) {
  EntryBuilder b{&cat};
  const auto h_a1 = each_with({A(1), A(2)}, B(1)) + std::vector<CommutePair>{comm(C(1), C(2))};
  const auto h_a2 = each_with({A(1), A(2)}, B(1)) + each_with({C(1), C(2)}, B(2));
  const auto h_b1 = std::vector<CommutePair>{comm(A(1), A(2)), comm(C(1), C(2))};
  const auto h_b2 = std::vector<CommutePair>{comm(A(1), A(2))};

  b.add("F11.A1.raise.unit", F11, "c43eq126", raise(A(1)),
        {bare(),
         unit_raise(1, {plain(B(1))}, {Sh(A(1), N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))})},
        h_a1);
  b.add("F11.A1.lower.unit", F11, "c43eq127", lower(A(1)),
        {bare(),
         unit_lower(1, {plain(B(1))}, {Sh(A(1), -N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))})},
        h_a1);
  b.add("F11.A1.raise.binom", F11, "c43eq128", raise(A(1)),
        {binom(1, false, {poch(B(1), N1)}, {Sh(A(1), N1), Sh(B(1), N1), Sh(C(1), N1)},
               {pinv(C(1), N1)})},
        h_a1);
  b.add("F11.A1.lower.binom", F11, "c43eq129", lower(A(1)),
        {binom(1, true, {poch(B(1), N1)}, {Sh(B(1), N1), Sh(C(1), N1)}, {pinv(C(1), N1)})},
        h_a1);

  b.add("F11.A2.raise.unit", F11, "c43eq130", raise(A(2)),
        {bare(),
         unit_raise(2, {}, {Sh(A(2), N1), Sh(B(2), 1), Sh(C(2), 1)}, {plain(B(2)), inv(C(2))}),
         unit_raise(3, {plain(B(1))}, {Sh(A(2), N1), Sh(B(1), 1), Sh(C(2), 1)}, {inv(C(2))})},
        h_a2);
  b.add("F11.A2.lower.unit", F11, "c43eq131", lower(A(2)),
        {bare(),
         unit_lower(2, {}, {Sh(A(2), -N1), Sh(B(2), 1), Sh(C(2), 1)}, {plain(B(2)), inv(C(2))}),
         unit_lower(3, {plain(B(1))}, {Sh(A(2), -N1), Sh(B(1), 1), Sh(C(2), 1)}, {inv(C(2))})},
        h_a2);
  b.add("F11.A2.raise.multi", F11, "c43eq132", raise(A(2)),
        {simplex(2, {{2, N1}, {3, N2}}, false, {poch(B(1), N2)},
                 {Sh(A(2), N1 + N2), Sh(B(1), N2), Sh(B(2), N1), Sh(C(2), N1 + N2)},
                 {poch(B(2), N1), pinv(C(2), N1 + N2)})},
        h_a2);
  b.add("F11.A2.lower.multi", F11, "c43eq133", lower(A(2)),
        {simplex(2, {{2, N1}, {3, N2}}, true, {poch(B(1), N2)},
                 {Sh(B(1), N2), Sh(B(2), N1), Sh(C(2), N1 + N2)},
                 {poch(B(2), N1), pinv(C(2), N1 + N2)})},
        h_a2);

  {
    // Printed first summand keeps B_1+n_1 I in the lowering sum.
    auto make = [&](LinExpr b_shift) {
      return std::vector<RhsTerm>{
          bare(),
          unit_lower(1, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), b_shift), Sh(C(1), 1)},
                     {inv(C(1))}),
          unit_lower(3, {plain(A(2))}, {Sh(A(2), 1), Sh(B(1), -N1), Sh(C(2), 1)}, {inv(C(2))})};
    };
    b.add("F11.B1.raise.unit", F11, "c43eq134", raise(B(1)),
          {bare(),
           unit_raise(1, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), N1), Sh(C(1), 1)}, {inv(C(1))}),
           unit_raise(3, {plain(A(2))}, {Sh(A(2), 1), Sh(B(1), N1), Sh(C(2), 1)}, {inv(C(2))})},
          h_b1);
    IdentityEntry& e = b.add("F11.B1.lower.unit", F11, "c43eq135", lower(B(1)),
                             make(-N1), h_b1);
    e.printed_rhs = make(N1);
    e.note = "c43eq135 prints B_1+n_1 I in the first lowering sum; the step is B_1-n_1 I";
  }
  {
    // Printed series header reads "A_+n_2 I"; the only parameter the n_2
    // axis can shift is A_2.  The literal completion A_1+n_2 I is kept as
    // the printed variant.
    auto make = [&](bool second_on_a1) {
      Shifts sh{Sh(A(1), N1), Sh(A(2), second_on_a1 ? K(0) : N2), Sh(B(1), N1 + N2),
                Sh(C(1), N1), Sh(C(2), N2)};
      if (second_on_a1) sh[0].second = N1 + N2;
      return std::vector<RhsTerm>{simplex(2, {{1, N1}, {3, N2}}, false,
                                          {poch(A(1), N1), poch(A(2), N2)}, sh,
                                          {pinv(C(1), N1), pinv(C(2), N2)})};
    };
    IdentityEntry& e = b.add("F11.B1.raise.multi", F11, "c43eq136", raise(B(1)),
                             make(false), h_b1);
    e.printed_rhs = make(true);
    e.note = "c43eq136 prints the garbled shift 'A_+n_2 I'; read as A_2+n_2 I";
  }
  {
    auto make = [&](bool second_on_a1) {
      Shifts sh{Sh(A(1), N1), Sh(A(2), second_on_a1 ? K(0) : N2), Sh(C(1), N1), Sh(C(2), N2)};
      if (second_on_a1) sh[0].second = N1 + N2;
      return std::vector<RhsTerm>{simplex(2, {{1, N1}, {3, N2}}, true,
                                          {poch(A(1), N1), poch(A(2), N2)}, sh,
                                          {pinv(C(1), N1), pinv(C(2), N2)})};
    };
    IdentityEntry& e = b.add("F11.B1.lower.multi", F11, "c43eq137", lower(B(1)),
                             make(false), h_b1);
    e.printed_rhs = make(true);
    e.note = "c43eq137 prints the garbled shift 'A_+n_2 I'; read as A_2+n_2 I";
  }

  b.add("F11.B2.raise.unit", F11, "c43eq138", raise(B(2)),
        {bare(),
         unit_raise(2, {plain(A(2))}, {Sh(A(2), 1), Sh(B(2), N1), Sh(C(2), 1)}, {inv(C(2))})},
        h_b2);
  b.add("F11.B2.lower.unit", F11, "c43eq139", lower(B(2)),
        {bare(),
         unit_lower(2, {plain(A(2))}, {Sh(A(2), 1), Sh(B(2), -N1), Sh(C(2), 1)}, {inv(C(2))})},
        h_b2);
  b.add("F11.B2.raise.binom", F11, "c43eq140", raise(B(2)),
        {binom(2, false, {poch(A(2), N1)}, {Sh(A(2), N1), Sh(B(2), N1), Sh(C(2), N1)},
               {pinv(C(2), N1)})},
        h_b2);
  b.add("F11.B2.lower.binom", F11, "c43eq141", lower(B(2)),
        {binom(2, true, {poch(A(2), N1)}, {Sh(A(2), N1), Sh(C(2), N1)}, {pinv(C(2), N1)})},
        h_b2);

  b.add("F11.C1.lower.unit", F11, "c43eq142", lower(C(1)),
        {bare(), c_lower(1, {plain(A(1)), plain(B(1))},
                         {Sh(A(1), 1), Sh(B(1), 1), Sh(C(1), K(2) - N1)}, C(1))},
        each_with({A(1), A(2)}, B(1)));
  {
    // Printed third term couples x_3 with A_1; the x_3 axis of the series
    // couples A_2 with B_1.
    auto make = [&](ParamId aslot) {
      return std::vector<RhsTerm>{
          bare(),
          c_lower(2, {plain(A(2))}, {Sh(A(2), 1), Sh(B(2), 1), Sh(C(2), K(2) - N1)}, C(2),
                  {plain(B(2))}),
          c_lower(3, {plain(aslot), plain(B(1))},
                  {Sh(aslot, 1), Sh(B(1), 1), Sh(C(2), K(2) - N1)}, C(2))};
    };
    IdentityEntry& e = b.add("F11.C2.lower.unit", F11, "c43eq143", lower(C(2)),
                             make(A(2)),
                             std::vector<CommutePair>{comm(A(1), A(2))} +
                                 each_with({A(1), A(2)}, B(1)) + each_with({C(1), C(2)}, B(2)));
    e.printed_rhs = make(A(1));
    e.note = "c43eq143 prints x_3 A_1 B_1 [...F_11[A_1+I, ...]]; the x_3 axis couples A_2";
  }
}

void append_f12(std::vector<IdentityEntry>& cat) {
  EntryBuilder b{&cat};
  const auto h_a1 = each_with({A(1), A(2)}, B(1)) + each_with({C(1), C(2)}, B(2));
  const auto h_a2 = each_with({A(1), A(2)}, B(1));
  const auto h_b1 = std::vector<CommutePair>{comm(A(1), A(2)), comm(C(1), C(2))};

  b.add("F12.A1.raise.unit", F12, "c43eq144", raise(A(1)),
        {bare(),
         unit_raise(1, {plain(B(1))}, {Sh(A(1), N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_raise(3, {}, {Sh(A(1), N1), Sh(B(2), 1), Sh(C(2), 1)}, {plain(B(2)), inv(C(2))})},
        h_a1);
  b.add("F12.A1.lower.unit", F12, "c43eq145", lower(A(1)),
        {bare(),
         unit_lower(1, {plain(B(1))}, {Sh(A(1), -N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_lower(3, {}, {Sh(A(1), -N1), Sh(B(2), 1), Sh(C(2), 1)}, {plain(B(2)), inv(C(2))})},
        h_a1);
  b.add("F12.A1.raise.multi", F12, "c43eq146", raise(A(1)),
        {simplex(2, {{1, N1}, {3, N2}}, false, {poch(B(1), N1)},
                 {Sh(A(1), N1 + N2), Sh(B(1), N1), Sh(B(2), N2), Sh(C(1), N1), Sh(C(2), N2)},
                 {poch(B(2), N2), pinv(C(1), N1), pinv(C(2), N2)})},
        h_a1);
  b.add("F12.A1.lower.multi", F12, "c43eq147", lower(A(1)),
        {simplex(2, {{1, N1}, {3, N2}}, true, {poch(B(1), N1)},
                 {Sh(B(1), N1), Sh(B(2), N2), Sh(C(1), N1), Sh(C(2), N2)},
                 {poch(B(2), N2), pinv(C(1), N1), pinv(C(2), N2)})},
        h_a1);

  {
    // c43eq148/149/150 print F_12[A_1 +- n_1 I, ...] for the A_2 shift; the
    // series pattern couples m_2 with A_2.
    auto make_unit = [&](ParamId aslot, bool lower_form) {
      RhsTerm t = lower_form
                      ? unit_lower(2, {plain(B(1))},
                                   {Sh(aslot, -N1), Sh(B(1), 1), Sh(C(2), 1)}, {inv(C(2))})
                      : unit_raise(2, {plain(B(1))},
                                   {Sh(aslot, N1), Sh(B(1), 1), Sh(C(2), 1)}, {inv(C(2))});
      return std::vector<RhsTerm>{bare(), t};
    };
    IdentityEntry& er = b.add("F12.A2.raise.unit", F12, "c43eq148", raise(A(2)),
                              make_unit(A(2), false), h_a2);
    er.printed_rhs = make_unit(A(1), false);
    er.note = "c43eq148 prints F_12[A_1+n_1 I, ...]; the m_2 axis couples A_2";
    IdentityEntry& el = b.add("F12.A2.lower.unit", F12, "c43eq149", lower(A(2)),
                              make_unit(A(2), true), h_a2);
    el.printed_rhs = make_unit(A(1), true);
    el.note = "c43eq149 prints F_12[A_1-n_1 I, ...]; the m_2 axis couples A_2";

    auto make_binom = [&](ParamId aslot) {
      return std::vector<RhsTerm>{binom(2, false, {poch(B(1), N1)},
                                        {Sh(aslot, N1), Sh(B(1), N1), Sh(C(2), N1)},
                                        {pinv(C(2), N1)})};
    };
    IdentityEntry& eb = b.add("F12.A2.raise.binom", F12, "c43eq150", raise(A(2)),
                              make_binom(A(2)), h_a2);
    eb.printed_rhs = make_binom(A(1));
    eb.note = "c43eq150 prints F_12[A_1+n_1 I, ...]; the m_2 axis couples A_2";
  }
  b.add("F12.A2.lower.binom", F12, "c43eq151", lower(A(2)),
        {binom(2, true, {poch(B(1), N1)}, {Sh(B(1), N1), Sh(C(2), N1)}, {pinv(C(2), N1)})},
        h_a2);

  {
    // c43eq152 is flagged in the source; the printed pairing survives
    // validation, so printed and corrected coincide.
    std::vector<RhsTerm> rhs{
        bare(),
        unit_raise(1, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), N1), Sh(C(1), 1)}, {inv(C(1))}),
        unit_raise(2, {plain(A(2))}, {Sh(A(2), 1), Sh(B(1), N1), Sh(C(2), 1)}, {inv(C(2))})};
    IdentityEntry& e = b.add("F12.B1.raise.unit", F12, "c43eq152", raise(B(1)), rhs, h_b1);
    e.printed_rhs = rhs;
    e.note = "c43eq152 pairs x_2 with A_2, C_2 while the series pairs m_2 with (A_2, B_1, C_2); "
             "validated as printed";
  }
  {
    // Printed first summand freezes B_1+I in the lowering sum.
    auto make = [&](LinExpr b_shift) {
      return std::vector<RhsTerm>{
          bare(),
          unit_lower(1, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), b_shift), Sh(C(1), 1)},
                     {inv(C(1))}),
          unit_lower(2, {plain(A(2))}, {Sh(A(2), 1), Sh(B(1), -N1), Sh(C(2), 1)}, {inv(C(2))})};
    };
    IdentityEntry& e = b.add("F12.B1.lower.unit", F12, "c43eq153", lower(B(1)),
                             make(-N1), h_b1);
    e.printed_rhs = make(K(1));
    e.note = "c43eq153 prints F_12[A_1+I, B_1+I, C_1+I] in the first lowering sum; the step is "
             "B_1-n_1 I";
  }
  b.add("F12.B1.raise.multi", F12, "c43eq154", raise(B(1)),
        {simplex(2, {{1, N1}, {2, N2}}, false, {poch(A(1), N1), poch(A(2), N2)},
                 {Sh(A(1), N1), Sh(A(2), N2), Sh(B(1), N1 + N2), Sh(C(1), N1), Sh(C(2), N2)},
                 {pinv(C(1), N1), pinv(C(2), N2)})},
        h_b1);
  b.add("F12.B1.lower.multi", F12, "c43eq155", lower(B(1)),
        {simplex(2, {{1, N1}, {2, N2}}, true, {poch(A(1), N1), poch(A(2), N2)},
                 {Sh(A(1), N1), Sh(A(2), N2), Sh(C(1), N1), Sh(C(2), N2)},
                 {pinv(C(1), N1), pinv(C(2), N2)})},
        h_b1);

  b.add("F12.B2.raise.unit", F12, "c43eq156", raise(B(2)),
        {bare(),
         unit_raise(3, {plain(A(1))}, {Sh(A(1), 1), Sh(B(2), N1), Sh(C(2), 1)}, {inv(C(2))})},
        {});
  b.add("F12.B2.lower.unit", F12, "c43eq157", lower(B(2)),
        {bare(),
         unit_lower(3, {plain(A(1))}, {Sh(A(1), 1), Sh(B(2), -N1), Sh(C(2), 1)}, {inv(C(2))})},
        {});
  b.add("F12.B2.raise.binom", F12, "c43eq158", raise(B(2)),
        {binom(3, false, {poch(A(1), N1)}, {Sh(A(1), N1), Sh(B(2), N1), Sh(C(2), N1)},
               {pinv(C(2), N1)})},
        {});
  b.add("F12.B2.lower.binom", F12, "c43eq159", lower(B(2)),
        {binom(3, true, {poch(A(1), N1)}, {Sh(A(1), N1), Sh(C(2), N1)}, {pinv(C(2), N1)})},
        {});

  b.add("F12.C1.lower.unit", F12, "c43eq160", lower(C(1)),
        {bare(), c_lower(1, {plain(A(1)), plain(B(1))},
                         {Sh(A(1), 1), Sh(B(1), 1), Sh(C(1), K(2) - N1)}, C(1))},
        each_with({A(1), A(2)}, B(1)) + std::vector<CommutePair>{comm(C(1), C(2))});
  b.add("F12.C2.lower.unit", F12, "c43eq161", lower(C(2)),
        {bare(),
         c_lower(2, {plain(A(2)), plain(B(1))}, {Sh(A(2), 1), Sh(B(1), 1), Sh(C(2), K(2) - N1)},
                 C(2)),
         c_lower(3, {plain(A(1))}, {Sh(A(1), 1), Sh(B(2), 1), Sh(C(2), K(2) - N1)}, C(2),
                 {plain(B(2))})},
        std::vector<CommutePair>{comm(A(1), A(2))} + each_with({A(1), A(2)}, B(1)) +
            each_with({C(1), C(2)}, B(2)));
}

void append_f13(std::vector<IdentityEntry>& cat) {
  EntryBuilder b{&cat};
  const auto h_a1 = each_with({A(1), A(2)}, B(1));
  const auto h_a2 = each_with({A(1), A(2)}, B(1)) + std::vector<CommutePair>{comm(C(1), B(2))};
  const auto h_b = std::vector<CommutePair>{comm(A(1), A(2))};

  b.add("F13.A1.raise.unit", F13, "c43eq162", raise(A(1)),
        {bare(),
         unit_raise(1, {plain(B(1))}, {Sh(A(1), N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))})},
        h_a1);
  b.add("F13.A1.lower.unit", F13, "c43eq163", lower(A(1)),
        {bare(),
         unit_lower(1, {plain(B(1))}, {Sh(A(1), -N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))})},
        h_a1);
  b.add("F13.A1.raise.binom", F13, "c43eq164", raise(A(1)),
        {binom(1, false, {poch(B(1), N1)}, {Sh(A(1), N1), Sh(B(1), N1), Sh(C(1), N1)},
               {pinv(C(1), N1)})},
        h_a1);
  b.add("F13.A1.lower.binom", F13, "c43eq165", lower(A(1)),
        {binom(1, true, {poch(B(1), N1)}, {Sh(B(1), N1), Sh(C(1), N1)}, {pinv(C(1), N1)})},
        h_a1);

  b.add("F13.A2.raise.unit", F13, "c43eq166", raise(A(2)),
        {bare(),
         unit_raise(2, {}, {Sh(A(2), N1), Sh(B(2), 1), Sh(C(1), 1)}, {plain(B(2)), inv(C(1))}),
         unit_raise(3, {plain(B(1))}, {Sh(A(2), N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))})},
        h_a2);
  b.add("F13.A2.lower.unit", F13, "c43eq167", lower(A(2)),
        {bare(),
         unit_lower(2, {}, {Sh(A(2), -N1), Sh(B(2), 1), Sh(C(1), 1)}, {plain(B(2)), inv(C(1))}),
         unit_lower(3, {plain(B(1))}, {Sh(A(2), -N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))})},
        h_a2);
  b.add("F13.A2.raise.multi", F13, "c43eq168", raise(A(2)),
        {simplex(2, {{2, N1}, {3, N2}}, false, {poch(B(1), N2)},
                 {Sh(A(2), N1 + N2), Sh(B(1), N2), Sh(B(2), N1), Sh(C(1), N1 + N2)},
                 {poch(B(2), N1), pinv(C(1), N1 + N2)})},
        h_a2);
  b.add("F13.A2.lower.multi", F13, "c43eq169", lower(A(2)),
        {simplex(2, {{2, N1}, {3, N2}}, true, {poch(B(1), N2)},
                 {Sh(B(1), N2), Sh(B(2), N1), Sh(C(1), N1 + N2)},
                 {poch(B(2), N1), pinv(C(1), N1 + N2)})},
        h_a2);

  b.add("F13.B1.raise.unit", F13, "c43eq170", raise(B(1)),
        {bare(),
         unit_raise(1, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), N1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_raise(3, {plain(A(2))}, {Sh(A(2), 1), Sh(B(1), N1), Sh(C(1), 1)}, {inv(C(1))})},
        h_b);
  b.add("F13.B1.lower.unit", F13, "c43eq171", lower(B(1)),
        {bare(),
         unit_lower(1, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), -N1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_lower(3, {plain(A(2))}, {Sh(A(2), 1), Sh(B(1), -N1), Sh(C(1), 1)}, {inv(C(1))})},
        h_b);
  b.add("F13.B1.raise.multi", F13, "c43eq172", raise(B(1)),
        {simplex(2, {{1, N1}, {3, N2}}, false, {poch(A(1), N1), poch(A(2), N2)},
                 {Sh(A(1), N1), Sh(A(2), N2), Sh(B(1), N1 + N2), Sh(C(1), N1 + N2)},
                 {pinv(C(1), N1 + N2)})},
        h_b);
  b.add("F13.B1.lower.multi", F13, "c43eq173", lower(B(1)),
        {simplex(2, {{1, N1}, {3, N2}}, true, {poch(A(1), N1), poch(A(2), N2)},
                 {Sh(A(1), N1), Sh(A(2), N2), Sh(C(1), N1 + N2)}, {pinv(C(1), N1 + N2)})},
        h_b);

  b.add("F13.B2.raise.unit", F13, "c43eq174", raise(B(2)),
        {bare(),
         unit_raise(2, {plain(A(2))}, {Sh(A(2), 1), Sh(B(2), N1), Sh(C(1), 1)}, {inv(C(1))})},
        h_b);
  b.add("F13.B2.lower.unit", F13, "c43eq175", lower(B(2)),
        {bare(),
         unit_lower(2, {plain(A(2))}, {Sh(A(2), 1), Sh(B(2), -N1), Sh(C(1), 1)}, {inv(C(1))})},
        h_b);
  b.add("F13.B2.raise.binom", F13, "c43eq176", raise(B(2)),
        {binom(2, false, {poch(A(2), N1)}, {Sh(A(2), N1), Sh(B(2), N1), Sh(C(1), N1)},
               {pinv(C(1), N1)})},
        h_b);
  b.add("F13.B2.lower.binom", F13, "c43eq177", lower(B(2)),
        {binom(2, true, {poch(A(2), N1)}, {Sh(A(2), N1), Sh(C(1), N1)}, {pinv(C(1), N1)})},
        h_b);

  b.add("F13.C1.lower.unit", F13, "c43eq178", lower(C(1)),
        {bare(),
         c_lower(1, {plain(A(1)), plain(B(1))}, {Sh(A(1), 1), Sh(B(1), 1), Sh(C(1), K(2) - N1)},
                 C(1)),
         c_lower(2, {plain(A(2))}, {Sh(A(2), 1), Sh(B(2), 1), Sh(C(1), K(2) - N1)}, C(1),
                 {plain(B(2))}),
         c_lower(3, {plain(A(2)), plain(B(1))}, {Sh(A(2), 1), Sh(B(1), 1), Sh(C(1), K(2) - N1)},
                 C(1))},
        std::vector<CommutePair>{comm(A(1), A(2))} + each_with({A(1), A(2)}, B(1)) +
            std::vector<CommutePair>{comm(B(2), C(1))});
}

void append_f14(std::vector<IdentityEntry>& cat) {
  EntryBuilder b{&cat};
  const auto h_a1 = std::vector<CommutePair>{comm(A(1), B(1))} +
                    each_with({C(1), C(2)}, B(2)) + std::vector<CommutePair>{comm(C(1), C(2))};
  const auto h_b1 = std::vector<CommutePair>{comm(C(1), C(2))};

  b.add("F14.A1.raise.unit", F14, "c43eq179", raise(A(1)),
        {bare(),
         unit_raise(1, {plain(B(1))}, {Sh(A(1), N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_raise(2, {}, {Sh(A(1), N1), Sh(B(2), 1), Sh(C(2), 1)}, {plain(B(2)), inv(C(2))}),
         unit_raise(3, {plain(B(1))}, {Sh(A(1), N1), Sh(B(1), 1), Sh(C(2), 1)}, {inv(C(2))})},
        h_a1);
  b.add("F14.A1.lower.unit", F14, "c43eq180", lower(A(1)),
        {bare(),
         unit_lower(1, {plain(B(1))}, {Sh(A(1), -N1), Sh(B(1), 1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_lower(2, {}, {Sh(A(1), -N1), Sh(B(2), 1), Sh(C(2), 1)}, {plain(B(2)), inv(C(2))}),
         unit_lower(3, {plain(B(1))}, {Sh(A(1), -N1), Sh(B(1), 1), Sh(C(2), 1)}, {inv(C(2))})},
        h_a1);
  b.add("F14.A1.raise.multi", F14, "c43eq181", raise(A(1)),
        {simplex(3, {{1, N1}, {2, N2}, {3, N3}}, false, {poch(B(1), N1 + N3)},
                 {Sh(A(1), N1 + N2 + N3), Sh(B(1), N1 + N3), Sh(B(2), N2),
                  Sh(C(1), N1), Sh(C(2), N2 + N3)},
                 {poch(B(2), N2), pinv(C(1), N1), pinv(C(2), N2 + N3)})},
        h_a1);
  b.add("F14.A1.lower.multi", F14, "c43eq182", lower(A(1)),
        {simplex(3, {{1, N1}, {2, N2}, {3, N3}}, true, {poch(B(1), N1 + N3)},
                 {Sh(B(1), N1 + N3), Sh(B(2), N2), Sh(C(1), N1), Sh(C(2), N2 + N3)},
                 {poch(B(2), N2), pinv(C(1), N1), pinv(C(2), N2 + N3)})},
        h_a1);

  b.add("F14.B1.raise.unit", F14, "c43eq183", raise(B(1)),
        {bare(),
         unit_raise(1, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), N1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_raise(3, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), N1), Sh(C(2), 1)}, {inv(C(2))})},
        h_b1);
  b.add("F14.B1.lower.unit", F14, "c43eq184", lower(B(1)),
        {bare(),
         unit_lower(1, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), -N1), Sh(C(1), 1)}, {inv(C(1))}),
         unit_lower(3, {plain(A(1))}, {Sh(A(1), 1), Sh(B(1), -N1), Sh(C(2), 1)}, {inv(C(2))})},
        h_b1);
  b.add("F14.B1.raise.multi", F14, "c43eq185", raise(B(1)),
        {simplex(2, {{1, N1}, {3, N2}}, false, {poch(A(1), N1 + N2)},
                 {Sh(A(1), N1 + N2), Sh(B(1), N1 + N2), Sh(C(1), N1), Sh(C(2), N2)},
                 {pinv(C(1), N1), pinv(C(2), N2)})},
        h_b1);
  b.add("F14.B1.lower.multi", F14, "c43eq186", lower(B(1)),
        {simplex(2, {{1, N1}, {3, N2}}, true, {poch(A(1), N1 + N2)},
                 {Sh(A(1), N1 + N2), Sh(C(1), N1), Sh(C(2), N2)},
                 {pinv(C(1), N1), pinv(C(2), N2)})},
        h_b1);

  b.add("F14.B2.raise.unit", F14, "c43eq187", raise(B(2)),
        {bare(),
         unit_raise(2, {plain(A(1))}, {Sh(A(1), 1), Sh(B(2), N1), Sh(C(2), 1)}, {inv(C(2))})},
        {});
  b.add("F14.B2.lower.unit", F14, "c43eq188", lower(B(2)),
        {bare(),
         unit_lower(2, {plain(A(1))}, {Sh(A(1), 1), Sh(B(2), -N1), Sh(C(2), 1)}, {inv(C(2))})},
        {});
  b.add("F14.B2.raise.binom", F14, "c43eq189", raise(B(2)),
        {binom(2, false, {poch(A(1), N1)}, {Sh(A(1), N1), Sh(B(2), N1), Sh(C(2), N1)},
               {pinv(C(2), N1)})},
        {});
  b.add("F14.B2.lower.binom", F14, "c43eq190", lower(B(2)),
        {binom(2, true, {poch(A(1), N1)}, {Sh(A(1), N1), Sh(C(2), N1)}, {pinv(C(2), N1)})},
        {});

  b.add("F14.C1.lower.unit", F14, "c43eq191", lower(C(1)),
        {bare(), c_lower(1, {plain(A(1)), plain(B(1))},
                         {Sh(A(1), 1), Sh(B(1), 1), Sh(C(1), K(2) - N1)}, C(1))},
        {comm(A(1), B(1))});
  b.add("F14.C2.lower.unit", F14, "c43eq192", lower(C(2)),
        {bare(),
         c_lower(2, {plain(A(1))}, {Sh(A(1), 1), Sh(B(2), 1), Sh(C(2), K(2) - N1)}, C(2),
                 {plain(B(2))}),
         c_lower(3, {plain(A(1)), plain(B(1))}, {Sh(A(1), 1), Sh(B(1), 1), Sh(C(2), K(2) - N1)},
                 C(2))},
        std::vector<CommutePair>{comm(A(1), B(1))} + each_with({C(1), C(2)}, B(2)));
}

} // namespace

void append_three_variable(std::vector<IdentityEntry>& cat) {
  append_f3(cat);
  append_f4(cat);
  append_f6(cat);
  append_f7(cat);
  append_f8(cat);
  append_f10(cat);
  append_f11(cat);
  append_f12(cat);
  append_f13(cat);
  append_f14(cat);
}

} // namespace lauricella::builder
