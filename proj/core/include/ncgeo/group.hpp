#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncgeo {

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAdStable : GroupError {
    using GroupError::GroupError;
};
struct ContainsIdentity : GroupError {
    using GroupError::GroupError;
};

// Finite group as an index set 0..order-1 with identity at 0. Construction
// from permutation generators enumerates elements breadth-first over
// generator words, so element order (and every downstream basis) is stable.
class GroupTable {
public:
    static GroupTable from_permutations(int degree,
                                        const std::vector<std::vector<int>>& generators,
                                        const std::vector<std::string>& generator_labels = {},
                                        std::size_t order_bound = 512);
    static GroupTable from_table(const std::vector<std::vector<int>>& mul);

    std::size_t order() const { return n_; }
    int mul(int g, int h) const { return mul_[g * n_ + h]; }
    int inv(int g) const { return inv_[g]; }
    int id() const { return 0; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    std::string label(int g) const { return labels_[g]; }
    int element_by_label(const std::string& s) const;  // -1 when absent

    // classes sorted by minimal element; identity class comes first
    std::vector<std::vector<int>> conjugacy_classes() const;

private:
    GroupTable() = default;
    void finish_tables();  // inverse table + exhaustive checks

    std::size_t n_ = 0;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
};

// The set C: Ad-stable, identity-free, members in ascending element order.
struct AdSet {
    const GroupTable* group = nullptr;
    std::vector<int> members;

    std::size_t size() const { return members.size(); }
    int element(std::size_t i) const { return members[i]; }
    // position of element g in members, -1 when absent
    int index_of(int g) const;
    bool contains(int g) const { return index_of(g) >= 0; }
};

AdSet validate_ad_set(const GroupTable& G, std::vector<int> members);

// builtins with the labeling used throughout the reports
GroupTable builtin_s3();
GroupTable builtin_zn(int n);
GroupTable builtin_dihedral(int n);
GroupTable builtin_s4();

}  // namespace ncgeo
