#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "atn/errors.hpp"

namespace atn {

// Finite group as a validated multiplication table. Element 0 is the identity.
class FiniteGroup {
  public:
    // table[a*n + b] = a*b. Throws ValidationError unless the table is a group
    // with identity at index 0 (closure, associativity, two-sided inverses).
    static FiniteGroup from_table(int n, std::vector<int> table, std::string name = "");

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int identity() const { return 0; }
    const std::string& name() const { return name_; }

    bool is_abelian() const;
    // Elements of the subgroup generated by the given elements, sorted.
    std::vector<int> generated_subgroup(const std::vector<int>& gens) const;
    // True when elems is closed under product and inverse and contains 0.
    bool is_subgroup(const std::vector<int>& elems) const;

    bool operator==(const FiniteGroup& other) const {
        return n_ == other.n_ && table_ == other.table_;
    }

  private:
    FiniteGroup() = default;
    int n_ = 0;
    std::vector<int> table_;
    std::vector<int> inv_;
    std::string name_;
};

FiniteGroup make_cyclic(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// "Z2", "Z2xZ2", "Z4xZ3", ... cyclic factors joined by 'x'.
FiniteGroup group_from_spec(const std::string& spec);

// First line: order n. Then n lines of n indices (row a = products a*b).
FiniteGroup group_from_stream(std::istream& in, const std::string& name = "");
FiniteGroup group_from_file(const std::string& path);

// Subgroup as a standalone group; embed[i] = parent element of subgroup element i.
// Identity of the parent must be present and maps to index 0.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& elems,
                              std::vector<int>* embed = nullptr);

}  // namespace atn
