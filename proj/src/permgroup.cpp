#include "specht/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "specht/errors.hpp"

namespace specht {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size() + 1, 0);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("permutation images must be a bijection of 1..n");
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) images[static_cast<std::size_t>(k - 1)] = k;
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (int k = 1; k <= degree(); ++k) {
        if ((*this)(k) != k) return false;
    }
    return true;
}

std::string Permutation::to_cycle_string() const {
    std::ostringstream out;
    std::vector<char> visited(images_.size() + 1, 0);
    bool any = false;
    for (int start = 1; start <= degree(); ++start) {
        if (visited[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
        any = true;
        out << '(';
        int k = start;
        bool first = true;
        do {
            visited[static_cast<std::size_t>(k)] = 1;
            if (!first) out << ',';
            out << k;
            first = false;
            k = (*this)(k);
        } while (k != start);
        out << ')';
    }
    return any ? out.str() : "()";
}

Permutation parse_permutation(const std::string& text, int degree) {
    if (degree < 1) throw std::invalid_argument("parse_permutation: degree must be positive");
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int k = 1; k <= degree; ++k) images[static_cast<std::size_t>(k - 1)] = k;

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw parse_error("expected '('", i);
        ++i;
        std::vector<int> cycle;
        std::set<int> in_cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!cycle.empty()) {
                if (text[i] != ',') throw parse_error("expected ',' or ')'", i);
                ++i;
                skip_ws();
            }
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw parse_error("expected a cycle entry", i);
            int value = std::stoi(text.substr(start, i - start));
            if (value < 1 || value > degree) {
                throw parse_error("cycle entry " + std::to_string(value) + " out of range 1.." +
                                      std::to_string(degree),
                                  start);
            }
            if (!in_cycle.insert(value).second) {
                throw parse_error("entry " + std::to_string(value) + " repeated within one cycle", start);
            }
            cycle.push_back(value);
            skip_ws();
        }
        if (i >= text.size()) throw parse_error("unterminated cycle", text.size());
        ++i; // consume ')'
        // Cycles apply left to right: compose the running permutation with this
        // cycle on the left of the application order.
        if (cycle.size() >= 2) {
            for (std::size_t j = 0; j < images.size(); ++j) {
                int v = images[j];
                auto it = std::find(cycle.begin(), cycle.end(), v);
                if (it != cycle.end()) {
                    auto next = it + 1 == cycle.end() ? cycle.begin() : it + 1;
                    images[j] = *next;
                }
            }
        }
        skip_ws();
    }
    return Permutation(std::move(images));
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> images(static_cast<std::size_t>(a.degree()));
    for (int k = 1; k <= a.degree(); ++k) images[static_cast<std::size_t>(k - 1)] = a(b(k));
    return Permutation(std::move(images));
}

Permutation inverse(const Permutation& a) {
    std::vector<int> images(static_cast<std::size_t>(a.degree()));
    for (int k = 1; k <= a.degree(); ++k) images[static_cast<std::size_t>(a(k) - 1)] = k;
    return Permutation(std::move(images));
}

Partition cycle_type(const Permutation& a) {
    std::vector<int> lengths;
    std::vector<char> visited(static_cast<std::size_t>(a.degree()) + 1, 0);
    for (int start = 1; start <= a.degree(); ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        int len = 0;
        int k = start;
        do {
            visited[static_cast<std::size_t>(k)] = 1;
            ++len;
            k = a(k);
        } while (k != start);
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    return Partition(std::move(lengths));
}

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators,
                                   std::uint64_t element_cap)
    : degree_(degree), generators_(std::move(generators)), element_cap_(element_cap) {
    if (degree_ < 1) throw std::invalid_argument("group degree must be positive");
    for (const auto& g : generators_) {
        if (g.degree() != degree_) {
            throw std::invalid_argument("generator degree does not match group degree");
        }
    }
}

PermutationGroup::PermutationGroup(const PermutationGroup& other)
    : degree_(other.degree_), generators_(other.generators_), element_cap_(other.element_cap_) {
    std::lock_guard<std::mutex> lock(other.mutex_);
    elements_ = other.elements_;
}

PermutationGroup& PermutationGroup::operator=(const PermutationGroup& other) {
    if (this == &other) return *this;
    std::scoped_lock lock(mutex_, other.mutex_);
    degree_ = other.degree_;
    generators_ = other.generators_;
    element_cap_ = other.element_cap_;
    elements_ = other.elements_;
    return *this;
}

const std::vector<Permutation>& PermutationGroup::elements() const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (elements_) return *elements_;

    std::set<std::vector<int>> seen;
    std::vector<Permutation> frontier{Permutation::identity(degree_)};
    seen.insert(frontier.front().images());
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& g : frontier) {
            for (const auto& s : generators_) {
                Permutation h = compose(s, g);
                if (seen.insert(h.images()).second) {
                    if (seen.size() > element_cap_) {
                        throw resource_limit_error(
                            "group closure exceeds element cap " + std::to_string(element_cap_) +
                            "; raise the cap to materialize this group");
                    }
                    next.push_back(std::move(h));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<Permutation> out;
    out.reserve(seen.size());
    for (const auto& images : seen) out.emplace_back(images);
    elements_ = std::move(out);
    return *elements_;
}

std::uint64_t PermutationGroup::order() const { return elements().size(); }

std::vector<ConjugacyClass> PermutationGroup::conjugacy_classes() const {
    const auto& elems = elements();
    std::set<std::vector<int>> remaining;
    for (const auto& e : elems) remaining.insert(e.images());

    std::vector<ConjugacyClass> classes;
    while (!remaining.empty()) {
        // Orbit of the least remaining element under conjugation by generators.
        std::vector<int> seed = *remaining.begin();
        std::set<std::vector<int>> orbit{seed};
        std::vector<Permutation> frontier{Permutation(seed)};
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const auto& a : frontier) {
                for (const auto& g : generators_) {
                    Permutation conj = compose(compose(g, a), inverse(g));
                    if (orbit.insert(conj.images()).second) next.push_back(std::move(conj));
                }
            }
            frontier = std::move(next);
        }
        ConjugacyClass cls;
        cls.representative = Permutation(*orbit.begin());
        cls.size = orbit.size();
        cls.cycle_type = specht::cycle_type(cls.representative);
        classes.push_back(std::move(cls));
        for (const auto& images : orbit) remaining.erase(images);
    }
    std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
        return a.representative.images() < b.representative.images();
    });
    return classes;
}

PermutationGroup edge_action_group(int m) {
    if (m < 2) throw std::invalid_argument("edge_action_group: m must be at least 2");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= m; ++a) {
        for (int b = a + 1; b <= m; ++b) pairs.emplace_back(a, b);
    }
    std::map<std::pair<int, int>, int> number;
    for (std::size_t i = 0; i < pairs.size(); ++i) number[pairs[i]] = static_cast<int>(i) + 1;

    auto induced = [&](const Permutation& g) {
        std::vector<int> images(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            int a = g(pairs[i].first);
            int b = g(pairs[i].second);
            if (a > b) std::swap(a, b);
            images[i] = number.at({a, b});
        }
        return Permutation(std::move(images));
    };

    std::vector<Permutation> gens;
    if (m >= 2) {
        PermutationGroup sm = symmetric_group(m);
        for (const auto& g : sm.generators()) gens.push_back(induced(g));
    }
    // Drop identity generators so the trivial m=2 case has a clean generator list.
    std::erase_if(gens, [](const Permutation& g) { return g.is_identity(); });
    return PermutationGroup(static_cast<int>(pairs.size()), std::move(gens));
}

PermutationGroup sign_twisted_double_group(int m) {
    if (m < 2) throw std::invalid_argument("sign_twisted_double_group: m must be at least 2");
    auto induced = [&](const Permutation& g, bool odd) {
        std::vector<int> images(static_cast<std::size_t>(2 * m));
        for (int i = 1; i <= m; ++i) {
            int j = g(i);
            if (odd) {
                images[static_cast<std::size_t>(i - 1)] = j + m;
                images[static_cast<std::size_t>(i - 1 + m)] = j;
            } else {
                images[static_cast<std::size_t>(i - 1)] = j;
                images[static_cast<std::size_t>(i - 1 + m)] = j + m;
            }
        }
        return Permutation(std::move(images));
    };
    std::vector<Permutation> gens;
    gens.push_back(induced(parse_permutation("(1,2)", m), true));
    if (m >= 3) {
        PermutationGroup sm = symmetric_group(m);
        const Permutation& cycle = sm.generators()[1];
        gens.push_back(induced(cycle, m % 2 == 0)); // an m-cycle is odd iff m is even
    }
    return PermutationGroup(2 * m, std::move(gens));
}

PermutationGroup symmetric_group(int n) {
    if (n < 1) throw std::invalid_argument("symmetric_group: n must be positive");
    std::vector<Permutation> gens;
    if (n >= 2) {
        gens.push_back(parse_permutation("(1,2)", n));
        if (n >= 3) {
            std::ostringstream cycle;
            cycle << '(';
            for (int k = 1; k <= n; ++k) {
                if (k > 1) cycle << ',';
                cycle << k;
            }
            cycle << ')';
            gens.push_back(parse_permutation(cycle.str(), n));
        }
    }
    return PermutationGroup(n, std::move(gens));
}

} // namespace specht
