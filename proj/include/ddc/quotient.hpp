#pragma once

// Lifting a DDC from a finite n-generated group G to the free group F_n.
//
// With φ(x_i) = g_i, every element of G is represented by a shortest word
// found by breadth-first search. A DDC {h_1..h_m} of diameter d in G lifts to
// {ĥ_1, ĥ_1·w_2, ..., ĥ_1·w_m} with w_i a shortest word for h_1⁻¹h_i; the
// lift is a DDC of diameter at most 2d in F_n.

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "ddc/check.hpp"
#include "ddc/word.hpp"

namespace ddc {

using ElementId = std::uint32_t;

class GroupOracle {
public:
    /// Z_M with the given generators.
    static GroupOracle modular(std::uint32_t modulus, std::vector<ElementId> generators);
    /// Explicit multiplication table; table[a * order + b] = a·b.
    static GroupOracle from_table(std::uint32_t order, ElementId identity, std::vector<ElementId> generators,
                                  std::vector<ElementId> table);

    std::uint32_t order() const noexcept { return order_; }
    ElementId identity() const noexcept { return identity_; }
    const std::vector<ElementId>& generators() const noexcept { return generators_; }
    GroupCtx ctx() const { return GroupCtx(static_cast<int>(generators_.size())); }
    bool is_modular() const noexcept { return table_.empty(); }

    ElementId mul(ElementId a, ElementId b) const;
    ElementId inverse(ElementId a) const;
    /// φ of a letter: g_i for +i, g_i⁻¹ for -i.
    ElementId letter_image(Letter l) const;
    /// φ(w), evaluated left to right.
    ElementId evaluate(const Word& w) const;

    /// Throws MalformedTable, NonAssociative or UnreachableElements. At most
    /// `max_triples` associativity checks are made; smaller tables are
    /// checked exhaustively.
    void validate(std::uint64_t max_triples = 100'000) const;

private:
    GroupOracle() = default;

    std::uint32_t order_ = 0;
    ElementId identity_ = 0;
    std::vector<ElementId> generators_;
    std::vector<ElementId> table_;
    std::vector<ElementId> inverses_;
};

/// `zmod M gens=a,b,...`
GroupOracle parse_zmod(std::string_view descriptor);
/// `table ORDER n=N`, identity id, generator ids, then ORDER rows.
GroupOracle parse_group_table(std::istream& in);
/// A zmod descriptor or the path of a table file. The result is validated.
GroupOracle load_group(const std::string& source);

/// Shortest word for every element, indexed by id. Letters are explored in
/// canonical order -n..-1, 1..n.
std::vector<Word> bfs_words(const GroupOracle& oracle, const Guards& guards = {});

bool is_ddc_in_group(const GroupOracle& oracle, const std::vector<ElementId>& set);
std::size_t group_diameter(const GroupOracle& oracle, const std::vector<ElementId>& set,
                           const std::vector<Word>& words);

struct LiftResult {
    DdcSet set;
    std::vector<Word> lifted;  // ĥ_i in the order of the input set
    std::size_t group_diameter = 0;
    std::size_t requested_d = 0;
    std::size_t free_diameter = 0;
};

/// Throws NotADdc, DiameterTooSmall or UnknownElement. h_1 is the first
/// element of `set`.
LiftResult lift(const GroupOracle& oracle, const std::vector<ElementId>& set, std::size_t d,
                const Guards& guards = {});

}  // namespace ddc
