#include "ddc/quotient.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_set>

namespace ddc {

GroupOracle GroupOracle::modular(std::uint32_t modulus, std::vector<ElementId> generators) {
    if (modulus == 0) throw Error(ErrorCode::MalformedTable, "modulus must be positive");
    if (generators.empty()) throw Error(ErrorCode::MalformedTable, "at least one generator required");
    for (ElementId g : generators) {
        if (g >= modulus) throw Error(ErrorCode::MalformedTable, "generator " + std::to_string(g) + " >= modulus");
    }
    GroupOracle g;
    g.order_ = modulus;
    g.identity_ = 0;
    g.generators_ = std::move(generators);
    return g;
}

GroupOracle GroupOracle::from_table(std::uint32_t order, ElementId identity, std::vector<ElementId> generators,
                                    std::vector<ElementId> table) {
    if (order == 0) throw Error(ErrorCode::MalformedTable, "order must be positive");
    if (table.size() != static_cast<std::size_t>(order) * order) {
        throw Error(ErrorCode::MalformedTable, "table must have ORDER x ORDER entries");
    }
    if (identity >= order) throw Error(ErrorCode::MalformedTable, "identity id out of range");
    if (generators.empty()) throw Error(ErrorCode::MalformedTable, "at least one generator required");
    for (ElementId g : generators) {
        if (g >= order) throw Error(ErrorCode::MalformedTable, "generator id out of range");
    }
    for (ElementId v : table) {
        if (v >= order) throw Error(ErrorCode::MalformedTable, "table entry " + std::to_string(v) + " out of range");
    }
    GroupOracle g;
    g.order_ = order;
    g.identity_ = identity;
    g.generators_ = std::move(generators);
    g.table_ = std::move(table);

    for (ElementId a = 0; a < order; ++a) {
        if (g.mul(identity, a) != a || g.mul(a, identity) != a) {
            throw Error(ErrorCode::MalformedTable, "identity is not neutral on element " + std::to_string(a));
        }
    }
    g.inverses_.assign(order, order);
    for (ElementId a = 0; a < order; ++a) {
        for (ElementId b = 0; b < order; ++b) {
            if (g.mul(a, b) == identity && g.mul(b, a) == identity) {
                g.inverses_[a] = b;
                break;
            }
        }
        if (g.inverses_[a] == order) {
            throw Error(ErrorCode::MalformedTable, "element " + std::to_string(a) + " has no inverse");
        }
    }
    return g;
}

ElementId GroupOracle::mul(ElementId a, ElementId b) const {
    if (is_modular()) return static_cast<ElementId>((static_cast<std::uint64_t>(a) + b) % order_);
    return table_[static_cast<std::size_t>(a) * order_ + b];
}

ElementId GroupOracle::inverse(ElementId a) const {
    if (is_modular()) return a == 0 ? 0 : order_ - a;
    return inverses_[a];
}

ElementId GroupOracle::letter_image(Letter l) const {
    const auto i = static_cast<std::size_t>(l < 0 ? -l : l) - 1;
    return l < 0 ? inverse(generators_[i]) : generators_[i];
}

ElementId GroupOracle::evaluate(const Word& w) const {
    ElementId acc = identity_;
    for (Letter l : w.letters()) acc = mul(acc, letter_image(l));
    return acc;
}

void GroupOracle::validate(std::uint64_t max_triples) const {
    if (!is_modular()) {
        const std::uint64_t k = order_;
        auto check = [&](ElementId a, ElementId b, ElementId c) {
            if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
                throw Error(ErrorCode::NonAssociative, "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                                           std::to_string(c) + ")");
            }
        };
        if (k * k * k <= max_triples) {
            for (ElementId a = 0; a < order_; ++a)
                for (ElementId b = 0; b < order_; ++b)
                    for (ElementId c = 0; c < order_; ++c) check(a, b, c);
        } else {
            std::mt19937_64 rng(0x9a5e11edULL);
            std::uniform_int_distribution<ElementId> pick(0, order_ - 1);
            for (std::uint64_t t = 0; t < max_triples; ++t) check(pick(rng), pick(rng), pick(rng));
        }
    }

    std::vector<char> seen(order_, 0);
    std::deque<ElementId> queue{identity_};
    seen[identity_] = 1;
    std::size_t reached = 1;
    const int n = static_cast<int>(generators_.size());
    while (!queue.empty()) {
        const ElementId cur = queue.front();
        queue.pop_front();
        for (Letter l = -n; l <= n; ++l) {
            if (l == 0) continue;
            const ElementId nb = mul(cur, letter_image(l));
            if (!seen[nb]) {
                seen[nb] = 1;
                ++reached;
                queue.push_back(nb);
            }
        }
    }
    if (reached != order_) {
        throw Error(ErrorCode::UnreachableElements,
                    std::to_string(order_ - reached) + " elements not reachable from the generators");
    }
}

namespace {

std::uint32_t parse_id(const std::string& token, ErrorCode code) {
    try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(token, &used);
        if (used != token.size() || v > 0xffffffffUL) throw std::out_of_range(token);
        return static_cast<std::uint32_t>(v);
    } catch (const std::logic_error&) {
        throw Error(code, "bad integer '" + token + "'");
    }
}

}  // namespace

GroupOracle parse_zmod(std::string_view descriptor) {
    std::istringstream in{std::string(descriptor)};
    std::string head, modulus, gens;
    in >> head >> modulus >> gens;
    if (head != "zmod" || modulus.empty() || gens.rfind("gens=", 0) != 0) {
        throw Error(ErrorCode::MalformedTable, "expected 'zmod M gens=a,b,...'");
    }
    std::vector<ElementId> generators;
    std::istringstream list(gens.substr(5));
    for (std::string tok; std::getline(list, tok, ',');) {
        if (!tok.empty()) generators.push_back(parse_id(tok, ErrorCode::MalformedTable));
    }
    return GroupOracle::modular(parse_id(modulus, ErrorCode::MalformedTable), std::move(generators));
}

GroupOracle parse_group_table(std::istream& in) {
    std::vector<std::string> tokens;
    for (std::string line; std::getline(in, line);) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        for (std::string tok; ls >> tok;) tokens.push_back(tok);
    }
    if (tokens.size() < 3 || tokens[0] != "table" || tokens[2].rfind("n=", 0) != 0) {
        throw Error(ErrorCode::MalformedTable, "expected header 'table ORDER n=N'");
    }
    const std::uint32_t order = parse_id(tokens[1], ErrorCode::MalformedTable);
    const std::uint32_t n = parse_id(tokens[2].substr(2), ErrorCode::MalformedTable);
    const std::size_t expected = 3 + 1 + n + static_cast<std::size_t>(order) * order;
    if (tokens.size() != expected) {
        throw Error(ErrorCode::MalformedTable, "expected " + std::to_string(expected) + " tokens, found " +
                                                   std::to_string(tokens.size()));
    }
    std::size_t pos = 3;
    const ElementId identity = parse_id(tokens[pos++], ErrorCode::MalformedTable);
    std::vector<ElementId> generators;
    for (std::uint32_t i = 0; i < n; ++i) generators.push_back(parse_id(tokens[pos++], ErrorCode::MalformedTable));
    std::vector<ElementId> table;
    table.reserve(static_cast<std::size_t>(order) * order);
    while (pos < tokens.size()) table.push_back(parse_id(tokens[pos++], ErrorCode::MalformedTable));
    return GroupOracle::from_table(order, identity, std::move(generators), std::move(table));
}

GroupOracle load_group(const std::string& source) {
    const auto first = source.find_first_not_of(" \t");
    if (first != std::string::npos && source.compare(first, 4, "zmod") == 0) {
        GroupOracle g = parse_zmod(source.substr(first));
        g.validate();
        return g;
    }
    std::ifstream in(source);
    if (!in) throw Error(ErrorCode::MalformedTable, "cannot open group table '" + source + "'");
    GroupOracle g = parse_group_table(in);
    g.validate();
    return g;
}

std::vector<Word> bfs_words(const GroupOracle& oracle, const Guards& guards) {
    if (oracle.order() > guards.max_elements) {
        throw Error(ErrorCode::ResourceLimit, "group order exceeds the element guard");
    }
    std::vector<std::vector<Letter>> paths(oracle.order());
    std::vector<char> seen(oracle.order(), 0);
    std::deque<ElementId> queue{oracle.identity()};
    seen[oracle.identity()] = 1;
    const int n = static_cast<int>(oracle.generators().size());
    while (!queue.empty()) {
        const ElementId cur = queue.front();
        queue.pop_front();
        for (Letter l = -n; l <= n; ++l) {
            if (l == 0) continue;
            const ElementId nb = oracle.mul(cur, oracle.letter_image(l));
            if (seen[nb]) continue;
            seen[nb] = 1;
            paths[nb] = paths[cur];
            paths[nb].push_back(l);
            queue.push_back(nb);
        }
    }
    std::vector<Word> out;
    out.reserve(paths.size());
    // A shortest path never backtracks, so every path is a reduced word.
    for (auto& p : paths) out.push_back(Word::from_reduced(std::move(p)));
    return out;
}

namespace {

void check_known(const GroupOracle& oracle, const std::vector<ElementId>& set) {
    for (ElementId h : set) {
        if (h >= oracle.order()) throw Error(ErrorCode::UnknownElement, "element id " + std::to_string(h));
    }
}

std::vector<ElementId> dedupe(const std::vector<ElementId>& set) {
    std::vector<ElementId> out;
    std::unordered_set<ElementId> seen;
    for (ElementId h : set) {
        if (seen.insert(h).second) out.push_back(h);
    }
    return out;
}

}  // namespace

bool is_ddc_in_group(const GroupOracle& oracle, const std::vector<ElementId>& set) {
    check_known(oracle, set);
    const auto elems = dedupe(set);
    std::unordered_set<ElementId> differences;
    for (ElementId g : elems) {
        for (ElementId h : elems) {
            if (g == h) continue;
            if (!differences.insert(oracle.mul(oracle.inverse(g), h)).second) return false;
        }
    }
    return true;
}

std::size_t group_diameter(const GroupOracle& oracle, const std::vector<ElementId>& set,
                           const std::vector<Word>& words) {
    check_known(oracle, set);
    if (set.empty()) throw Error(ErrorCode::EmptySet, "diameter of an empty set");
    std::size_t best = 0;
    for (ElementId g : set) {
        for (ElementId h : set) best = std::max(best, words[oracle.mul(oracle.inverse(g), h)].length());
    }
    return best;
}

LiftResult lift(const GroupOracle& oracle, const std::vector<ElementId>& set, std::size_t d, const Guards& guards) {
    check_known(oracle, set);
    const auto elems = dedupe(set);
    if (elems.empty()) throw Error(ErrorCode::EmptySet, "nothing to lift");
    if (!is_ddc_in_group(oracle, elems)) throw Error(ErrorCode::NotADdc, "the set is not a DDC in the group");
    const auto words = bfs_words(oracle, guards);
    LiftResult out{DdcSet(oracle.ctx()), {}, group_diameter(oracle, elems, words), d, 0};
    if (d < out.group_diameter) {
        throw Error(ErrorCode::DiameterTooSmall, "d = " + std::to_string(d) + " is below the group diameter " +
                                                     std::to_string(out.group_diameter));
    }
    const ElementId h1 = elems.front();
    const Word& base = words[h1];
    for (ElementId h : elems) out.lifted.push_back(mul(base, words[oracle.mul(oracle.inverse(h1), h)]));
    out.set = DdcSet(oracle.ctx(), out.lifted);
    out.free_diameter = diameter(out.set);
    return out;
}

}  // namespace ddc
