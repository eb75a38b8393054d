#include "ncgeo/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ncgeo {

namespace {

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
    // (f*g)(i) = f(g(i)), g applied first
    std::vector<int> r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
    return r;
}

bool is_permutation(const std::vector<int>& p, int degree) {
    if (static_cast<int>(p.size()) != degree) return false;
    std::vector<bool> seen(degree, false);
    for (int v : p) {
        if (v < 0 || v >= degree || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

}  // namespace

GroupTable GroupTable::from_permutations(int degree,
                                         const std::vector<std::vector<int>>& generators,
                                         const std::vector<std::string>& generator_labels,
                                         std::size_t order_bound) {
    for (const auto& g : generators)
        if (!is_permutation(g, degree)) throw GroupError("generator is not a permutation");

    std::vector<std::string> glab = generator_labels;
    while (glab.size() < generators.size())
        glab.push_back(std::string(1, static_cast<char>('a' + glab.size())));

    std::vector<int> identity(degree);
    std::iota(identity.begin(), identity.end(), 0);

    std::vector<std::vector<int>> elems{identity};
    std::vector<std::string> labels{"e"};
    std::map<std::vector<int>, int> index{{identity, 0}};

    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (std::size_t gi = 0; gi < generators.size(); ++gi) {
            auto w = compose(elems[head], generators[gi]);
            if (index.count(w)) continue;
            if (elems.size() == order_bound) throw GroupError("group order exceeds bound");
            index[w] = static_cast<int>(elems.size());
            labels.push_back(head == 0 ? glab[gi] : labels[head] + glab[gi]);
            elems.push_back(std::move(w));
        }
    }

    GroupTable t;
    t.n_ = elems.size();
    t.mul_.resize(t.n_ * t.n_);
    for (std::size_t i = 0; i < t.n_; ++i)
        for (std::size_t j = 0; j < t.n_; ++j) t.mul_[i * t.n_ + j] = index.at(compose(elems[i], elems[j]));
    t.labels_ = std::move(labels);
    t.finish_tables();
    return t;
}

GroupTable GroupTable::from_table(const std::vector<std::vector<int>>& mul) {
    std::size_t n = mul.size();
    if (n == 0) throw GroupError("empty multiplication table");
    GroupTable t;
    t.n_ = n;
    t.mul_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (mul[i].size() != n) throw GroupError("multiplication table is not square");
        for (std::size_t j = 0; j < n; ++j) {
            int v = mul[i][j];
            if (v < 0 || v >= static_cast<int>(n)) throw GroupError("table entry out of range");
            t.mul_[i * n + j] = v;
        }
    }
    for (std::size_t g = 0; g < n; ++g)
        if (t.mul(0, g) != static_cast<int>(g) || t.mul(g, 0) != static_cast<int>(g))
            throw GroupError("element 0 is not a two-sided identity");
    t.labels_.resize(n);
    t.labels_[0] = "e";
    for (std::size_t g = 1; g < n; ++g) t.labels_[g] = "g" + std::to_string(g);
    t.finish_tables();
    return t;
}

void GroupTable::finish_tables() {
    const int n = static_cast<int>(n_);
    inv_.assign(n_, -1);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h)
            if (mul(g, h) == 0 && mul(h, g) == 0) {
                inv_[g] = h;
                break;
            }
        if (inv_[g] < 0) throw GroupError("element without two-sided inverse");
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                if (mul(mul(g, h), k) != mul(g, mul(h, k)))
                    throw GroupError("multiplication table is not associative");
}

void GroupTable::set_labels(std::vector<std::string> labels) {
    if (labels.size() != n_) throw GroupError("label count mismatch");
    labels_ = std::move(labels);
}

int GroupTable::element_by_label(const std::string& s) const {
    for (std::size_t g = 0; g < n_; ++g)
        if (labels_[g] == s) return static_cast<int>(g);
    return -1;
}

std::vector<std::vector<int>> GroupTable::conjugacy_classes() const {
    const int n = static_cast<int>(n_);
    std::vector<bool> seen(n_, false);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        std::vector<int> cls;
        for (int g = 0; g < n; ++g) {
            int y = conj(g, x);
            if (!seen[y]) {
                seen[y] = true;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

int AdSet::index_of(int g) const {
    auto it = std::lower_bound(members.begin(), members.end(), g);
    if (it == members.end() || *it != g) return -1;
    return static_cast<int>(it - members.begin());
}

AdSet validate_ad_set(const GroupTable& G, std::vector<int> members) {
    if (members.empty()) throw GroupError("empty Ad-set");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int m : members) {
        if (m < 0 || m >= static_cast<int>(G.order())) throw GroupError("element out of range");
        if (m == G.id()) throw ContainsIdentity("Ad-set contains the identity");
    }
    for (int m : members)
        for (int g = 0; g < static_cast<int>(G.order()); ++g) {
            int c = G.conj(g, m);
            if (!std::binary_search(members.begin(), members.end(), c))
                throw NotAdStable("set is not closed under conjugation");
        }
    AdSet s;
    s.group = &G;
    s.members = std::move(members);
    return s;
}

GroupTable builtin_s3() {
    GroupTable t = GroupTable::from_permutations(3, {{1, 0, 2}, {0, 2, 1}}, {"u", "v"});
    t.set_labels({"e", "u", "v", "uv", "vu", "uvu"});
    return t;
}

GroupTable builtin_zn(int n) {
    if (n < 1) throw GroupError("z_n needs n >= 1");
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    if (n == 1) return GroupTable::from_permutations(1, {}, {});
    GroupTable t = GroupTable::from_permutations(n, {cyc}, {"g"});
    std::vector<std::string> labels{"e", "g"};
    for (int k = 2; k < n; ++k) labels.push_back("g" + std::to_string(k));
    t.set_labels(std::move(labels));
    return t;
}

GroupTable builtin_dihedral(int n) {
    if (n < 2) throw GroupError("dihedral_n needs n >= 2");
    std::vector<int> rot(n), refl(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
    }
    return GroupTable::from_permutations(n, {rot, refl}, {"r", "s"});
}

GroupTable builtin_s4() {
    return GroupTable::from_permutations(4, {{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}},
                                         {"a", "b", "c"});
}

}  // namespace ncgeo
