#pragma once

#include "qalg/qscalar.hpp"
#include "qalg/report.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace qalg {

// ---------------------------------------------------------------------------
// Free noncommutative polynomials over QScalar, reduced to normal form by the
// terminating rewrite system of a Presentation. Words store generator indices;
// the word order is degree-then-lexicographic in those indices and every rule
// must strictly decrease it, which makes reduction terminate by construction.
// ---------------------------------------------------------------------------

struct Generator {
    std::string name;
    int slot = 0;
};

using Word = std::vector<int>;

struct WordLess {
    bool operator()(const Word& x, const Word& y) const {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    }
};

class NCPoly {
public:
    using Terms = std::map<Word, QScalar, WordLess>;

    NCPoly() = default;

    static NCPoly unit() { return constant(QScalar::one()); }
    static NCPoly constant(const QScalar& c) {
        NCPoly p;
        p.add_term({}, c);
        return p;
    }
    static NCPoly from_word(Word w, const QScalar& c = QScalar::one()) {
        NCPoly p;
        p.add_term(std::move(w), c);
        return p;
    }
    static NCPoly from_gen(int g, const QScalar& c = QScalar::one()) {
        return from_word(Word{g}, c);
    }

    void add_term(Word w, const QScalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(std::move(w), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    QScalar constant_term() const {
        auto it = terms_.find(Word{});
        return it == terms_.end() ? QScalar::zero() : it->second;
    }
    /// Coefficient of the largest word (zero scalar for the zero polynomial).
    std::pair<Word, QScalar> leading() const {
        if (terms_.empty()) return {{}, QScalar::zero()};
        auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }

    NCPoly operator-() const {
        NCPoly r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    friend NCPoly operator+(const NCPoly& a, const NCPoly& b) {
        NCPoly r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }
    friend NCPoly operator-(const NCPoly& a, const NCPoly& b) {
        NCPoly r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
        return r;
    }
    friend NCPoly operator*(const QScalar& c, const NCPoly& p) {
        NCPoly r;
        if (c.is_zero()) return r;
        for (const auto& [w, k] : p.terms_) r.add_term(w, c * k);
        return r;
    }

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

private:
    Terms terms_;
};

/// Remap generator indices (tensor-slot embedding).
inline NCPoly lift_indices(const NCPoly& p, int offset) {
    NCPoly r;
    for (const auto& [w, c] : p.terms()) {
        Word w2 = w;
        for (int& g : w2) g += offset;
        r.add_term(std::move(w2), c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Presentation: an ordered generator list plus rewrite rules with two-letter
// left-hand sides. Rule coefficients must be rho-free so rewriting stays in
// the rational-function subfield.
// ---------------------------------------------------------------------------
class Presentation {
public:
    struct Rule {
        int left, right;
        NCPoly rhs;
    };

    explicit Presentation(std::string name) : name_(std::move(name)) {}

    int add_generator(std::string name, int slot = 0) {
        for (const auto& g : gens_)
            if (g.name == name && g.slot == slot)
                throw config_error("Presentation: duplicate generator " + name);
        gens_.push_back({std::move(name), slot});
        for (auto& row : rule_at_) row.push_back(-1);
        rule_at_.emplace_back(gens_.size(), -1);
        return static_cast<int>(gens_.size()) - 1;
    }

    void add_rule(int left, int right, NCPoly rhs) {
        check_index(left);
        check_index(right);
        const Word lhs{left, right};
        WordLess less;
        for (const auto& [w, c] : rhs.terms()) {
            for (int g : w) check_index(g);
            if (!less(w, lhs))
                throw config_error("Presentation " + name_ + ": rule for " + word_str(lhs) +
                                   " does not decrease the word order");
            if (!c.is_rho_free())
                throw config_error("Presentation " + name_ + ": rule coefficients must be rho-free");
        }
        rules_.push_back({left, right, std::move(rhs)});
        auto& slot = rule_at_[static_cast<size_t>(left)][static_cast<size_t>(right)];
        if (slot < 0) slot = static_cast<int>(rules_.size()) - 1;
    }

    void add_inverse_pair(int g, int ginv) {
        add_rule(std::max(g, ginv), std::min(g, ginv), NCPoly::unit());
        add_rule(std::min(g, ginv), std::max(g, ginv), NCPoly::unit());
        inverse_pairs_.emplace_back(g, ginv);
    }

    /// Record an inverse pair whose rules are already present (used when
    /// composing presentations).
    void note_inverse_pair(int g, int ginv) { inverse_pairs_.emplace_back(g, ginv); }

    const std::string& name() const { return name_; }
    int num_generators() const { return static_cast<int>(gens_.size()); }
    const Generator& generator(int i) const { return gens_[static_cast<size_t>(i)]; }
    const std::vector<Rule>& rules() const { return rules_; }
    const std::vector<std::pair<int, int>>& inverse_pairs() const { return inverse_pairs_; }

    int rule_index(int left, int right) const {
        return rule_at_[static_cast<size_t>(left)][static_cast<size_t>(right)];
    }

    int max_slot() const {
        int m = 0;
        for (const auto& g : gens_) m = std::max(m, g.slot);
        return m;
    }

    int find(const std::string& name, int slot = 0) const {
        for (size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name && gens_[i].slot == slot) return static_cast<int>(i);
        return -1;
    }
    int require(const std::string& name, int slot = 0) const {
        int i = find(name, slot);
        if (i < 0)
            throw config_error("Presentation " + name_ + ": no generator " + name + "@" +
                               std::to_string(slot));
        return i;
    }
    NCPoly gen(const std::string& name, int slot = 0) const {
        return NCPoly::from_gen(require(name, slot));
    }

    std::string gen_str(int i) const {
        const auto& g = gens_[static_cast<size_t>(i)];
        return g.slot == 0 ? g.name : g.name + "@" + std::to_string(g.slot);
    }
    std::string word_str(const Word& w) const {
        if (w.empty()) return "1";
        std::string out;
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) out += '.';
            out += gen_str(w[i]);
        }
        return out;
    }
    /// Term rendering "coeff * g1.g2", leading word first, sign-aware joins.
    std::string poly_str(const NCPoly& p) const {
        if (p.is_zero()) return "0";
        std::string out;
        const auto& t = p.terms();
        for (auto it = t.rbegin(); it != t.rend(); ++it) {
            const auto& [w, c] = *it;
            std::string term;
            std::string cs = c.to_string();
            bool wrap = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
            if (w.empty()) {
                term = wrap ? "(" + cs + ")" : cs;
            } else if (c.is_one()) {
                term = word_str(w);
            } else if ((-c).is_one()) {
                term = "-" + word_str(w);
            } else {
                term = (wrap ? "(" + cs + ")" : cs) + " * " + word_str(w);
            }
            if (out.empty()) {
                out = term;
            } else if (term.front() == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
        return out;
    }

    /// Same generators and rules with every coefficient exactly specialized at
    /// s = p/q (used for classical-limit checks).
    Presentation specialized_s(const Int& p, const Int& q) const {
        Presentation out(name_ + "|s=" + p.str() + "/" + q.str());
        out.gens_ = gens_;
        out.rule_at_.assign(gens_.size(), std::vector<int>(gens_.size(), -1));
        for (const auto& r : rules_) {
            NCPoly rhs;
            for (const auto& [w, c] : r.rhs.terms()) rhs.add_term(w, c.substituted_s(p, q));
            out.add_rule(r.left, r.right, std::move(rhs));
        }
        out.inverse_pairs_ = inverse_pairs_;
        return out;
    }

private:
    void check_index(int i) const {
        if (i < 0 || i >= num_generators())
            throw config_error("Presentation " + name_ + ": generator index out of range");
    }

    std::string name_;
    std::vector<Generator> gens_;
    std::vector<Rule> rules_;
    std::vector<std::vector<int>> rule_at_;  // first rule per (left, right), -1 if none
    std::vector<std::pair<int, int>> inverse_pairs_;
};

// ---------------------------------------------------------------------------
// Reduction engine.
// ---------------------------------------------------------------------------
namespace detail {

inline void expand_at(std::vector<std::pair<Word, QScalar>>& work, const Word& w, const QScalar& c,
                      size_t pos, const NCPoly& rhs) {
    for (const auto& [rw, rc] : rhs.terms()) {
        Word nw;
        nw.reserve(w.size() - 2 + rw.size());
        nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(pos));
        nw.insert(nw.end(), rw.begin(), rw.end());
        nw.insert(nw.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
        work.emplace_back(std::move(nw), c * rc);
    }
}

}  // namespace detail

/// Fixed point of rule application; leftmost match, first listed rule.
/// `steps`, when given, accumulates the number of rule applications.
inline NCPoly normal_form(const NCPoly& p, const Presentation& pres,
                          unsigned long long* steps = nullptr) {
    NCPoly out;
    std::vector<std::pair<Word, QScalar>> work(p.terms().begin(), p.terms().end());
    unsigned long long guard = 0;
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        if (c.is_zero()) continue;
        bool reduced = false;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            int r = pres.rule_index(w[i], w[i + 1]);
            if (r < 0) continue;
            if (++guard > 100'000'000ULL)
                throw std::logic_error("normal_form: rewrite budget exceeded");
            if (steps) ++*steps;
            detail::expand_at(work, w, c, i, pres.rules()[static_cast<size_t>(r)].rhs);
            reduced = true;
            break;
        }
        if (!reduced) out.add_term(std::move(w), c);
    }
    return out;
}

/// Reduction applying a uniformly random matching rule at a random position;
/// used to probe confluence in practice.
inline NCPoly normal_form_random(const NCPoly& p, const Presentation& pres, std::mt19937& rng) {
    NCPoly out;
    std::vector<std::pair<Word, QScalar>> work(p.terms().begin(), p.terms().end());
    std::vector<std::pair<size_t, int>> matches;
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        if (c.is_zero()) continue;
        matches.clear();
        for (size_t i = 0; i + 1 < w.size(); ++i)
            for (size_t r = 0; r < pres.rules().size(); ++r)
                if (pres.rules()[r].left == w[i] && pres.rules()[r].right == w[i + 1])
                    matches.emplace_back(i, static_cast<int>(r));
        if (matches.empty()) {
            out.add_term(std::move(w), c);
            continue;
        }
        auto [pos, r] = matches[std::uniform_int_distribution<size_t>(0, matches.size() - 1)(rng)];
        detail::expand_at(work, w, c, pos, pres.rules()[static_cast<size_t>(r)].rhs);
    }
    return out;
}

/// Concatenation-bilinear product reduced to normal form.
inline NCPoly nc_mul(const NCPoly& a, const NCPoly& b, const Presentation& pres) {
    NCPoly raw;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word w;
            w.reserve(wa.size() + wb.size());
            w.insert(w.end(), wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            raw.add_term(std::move(w), ca * cb);
        }
    return normal_form(raw, pres);
}

inline NCPoly nc_mul(std::initializer_list<NCPoly> factors, const Presentation& pres) {
    NCPoly acc = NCPoly::unit();
    for (const auto& f : factors) acc = nc_mul(acc, f, pres);
    return acc;
}

inline NCPoly commutator(const NCPoly& a, const NCPoly& b, const Presentation& pres) {
    return nc_mul(a, b, pres) - nc_mul(b, a, pres);
}

// ---------------------------------------------------------------------------
// Composition of presentations.
// ---------------------------------------------------------------------------
namespace detail {

/// Disjoint union; generators of p2 follow those of p1 (index offset
/// p1.num_generators()), every cross pair commutes, and p2's slots shift by
/// `slot_shift`.
inline Presentation combine(const Presentation& p1, const Presentation& p2, int slot_shift,
                            std::string name) {
    Presentation t(std::move(name));
    for (int i = 0; i < p1.num_generators(); ++i)
        t.add_generator(p1.generator(i).name, p1.generator(i).slot);
    const int off = p1.num_generators();
    for (int i = 0; i < p2.num_generators(); ++i)
        t.add_generator(p2.generator(i).name, p2.generator(i).slot + slot_shift);
    for (const auto& r : p1.rules()) t.add_rule(r.left, r.right, r.rhs);
    for (const auto& r : p2.rules())
        t.add_rule(r.left + off, r.right + off, lift_indices(r.rhs, off));
    for (int hi = off; hi < t.num_generators(); ++hi)
        for (int lo = 0; lo < off; ++lo)
            t.add_rule(hi, lo, NCPoly::from_word({lo, hi}));
    for (const auto& [g, gi] : p1.inverse_pairs()) t.note_inverse_pair(g, gi);
    for (const auto& [g, gi] : p2.inverse_pairs()) t.note_inverse_pair(g + off, gi + off);
    return t;
}

}  // namespace detail

/// Slot-retagged tensor square: factor 1 keeps its slots, factor 2's slots
/// shift past them. Generators of factor 2 start at index
/// p1.num_generators().
inline Presentation tensor_presentation(const Presentation& p1, const Presentation& p2) {
    return detail::combine(p1, p2, p1.max_slot() + 1,
                           "tensor(" + p1.name() + "," + p2.name() + ")");
}

/// The unique algebra-map extension of generator images, normal-formed in the
/// target. Every generator occurring in p must have an image.
inline NCPoly apply_morphism(const std::map<int, NCPoly>& images, const NCPoly& p,
                             const Presentation& target) {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        NCPoly acc = NCPoly::constant(c);
        for (int g : w) {
            auto it = images.find(g);
            if (it == images.end())
                throw config_error("apply_morphism: no image for generator index " +
                                   std::to_string(g));
            acc = nc_mul(acc, it->second, target);
        }
        out = out + acc;
    }
    return out;
}

/// Diamond-lemma check: every two-rule overlap (words of length <= 3, plus
/// duplicate left-hand sides) must reduce to one normal form both ways.
inline CheckReport check_confluence(const Presentation& pres) {
    const std::string name = "confluence-" + pres.name();
    const auto& rules = pres.rules();
    auto rewrite_once = [&](const Word& w, size_t pos, size_t rule) {
        NCPoly raw;
        std::vector<std::pair<Word, QScalar>> work;
        detail::expand_at(work, w, QScalar::one(), pos, rules[rule].rhs);
        for (auto& [nw, nc] : work) raw.add_term(std::move(nw), nc);
        return normal_form(raw, pres);
    };
    for (size_t i = 0; i < rules.size(); ++i) {
        for (size_t j = 0; j < rules.size(); ++j) {
            if (i != j && rules[i].left == rules[j].left && rules[i].right == rules[j].right) {
                const Word w{rules[i].left, rules[i].right};
                if (rewrite_once(w, 0, i) != rewrite_once(w, 0, j))
                    return CheckReport::failed(name, CheckMode::exact,
                                               "ambiguous rules for " + pres.word_str(w));
            }
            if (rules[i].right == rules[j].left) {
                const Word w{rules[i].left, rules[i].right, rules[j].right};
                if (rewrite_once(w, 0, i) != rewrite_once(w, 1, j))
                    return CheckReport::failed(name, CheckMode::exact,
                                               "overlap " + pres.word_str(w) +
                                                   " has two normal forms");
            }
        }
    }
    return CheckReport::pass_exact(name);
}

}  // namespace qalg
