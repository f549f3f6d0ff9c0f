#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace tlab {

/// One point of {1,...,r}^n.  Levels are 1-based; coordinate 0 is the least
/// significant digit of the mixed-radix rank.
class LevelConfig {
public:
    LevelConfig(std::vector<int> levels, int r);

    int n() const { return static_cast<int>(levels_.size()); }
    int r() const { return r_; }
    int level(int j) const;
    std::span<const int> levels() const { return levels_; }

    /// Copy with coordinate j set to level k (flip_coordinate).
    LevelConfig with_level(int j, int k) const;

    std::uint64_t rank() const;
    static LevelConfig from_rank(std::uint64_t rank, int n, int r);

    bool operator==(const LevelConfig&) const = default;

private:
    std::vector<int> levels_;
    int r_;
};

/// Conjunction of lower bounds: satisfied when x_j >= min_level for every
/// listed (coord, min_level) pair.  min_level >= 2, otherwise the literal
/// would be vacuous.
struct MonotoneClause {
    struct Literal {
        int coord;
        int min_level;
    };
    std::vector<Literal> literals;
};

namespace detail {

struct TableRep {
    std::vector<std::uint64_t> bits;  // packed by mixed-radix rank
    bool test(std::uint64_t rank) const {
        return (bits[rank >> 6] >> (rank & 63)) & 1u;
    }
};

struct DnfRep {
    std::vector<MonotoneClause> clauses;
};

struct KOfNRep {
    int k;
    int level;
};

using EventRep = std::variant<TableRep, DnfRep, KOfNRep>;

}  // namespace detail

class EventCursor;

/// An evaluable, coordinate-wise monotone indicator on {1,...,r}^n.
///
/// Construction does not prove monotonicity; call check_monotone (exhaustive,
/// capped) before feeding an event of unknown provenance to the exact
/// engines.  Immutable after construction.
class IncreasingEvent {
public:
    int n() const { return n_; }
    int r() const { return r_; }
    const std::string& description() const { return description_; }

    bool contains(std::span<const int> levels) const;
    bool contains(const LevelConfig& x) const;

    static IncreasingEvent from_dnf(int n, int r, std::vector<MonotoneClause> clauses,
                                    std::string description = "dnf");
    /// table[rank] = indicator; table.size() must equal r^n (capped).
    static IncreasingEvent from_table(int n, int r, const std::vector<bool>& table);

    // Built-ins.  All use the level order 1 < ... < r; `level` defaults to 2.
    static IncreasingEvent dictator(int n, int r, int j, int level = 2);
    static IncreasingEvent k_of_n(int n, int r, int k, int level = 2);
    static IncreasingEvent majority(int n, int r, int level = 2);  // ((n+1)/2)-of-n, odd n
    static IncreasingEvent tribes(int block, int blocks, int r, int level = 2);

    /// Truth table of this event in rank order (capped).
    std::vector<bool> to_table() const;

    EventCursor cursor() const;

    const detail::EventRep& rep() const { return rep_; }

private:
    IncreasingEvent(int n, int r, detail::EventRep rep, std::string description);

    int n_;
    int r_;
    detail::EventRep rep_;
    std::string description_;
};

/// Incremental evaluator: tracks one configuration and re-evaluates the
/// event in O(1)/O(degree) per coordinate change.  This is what the exact
/// engines drive while walking rank space.
class EventCursor {
public:
    explicit EventCursor(const IncreasingEvent& event);

    /// Reinitialize to `levels` (full recompute).
    void reset(std::span<const int> levels);
    /// Change coordinate j to `level` and update the cached value.
    void set_level(int j, int level);
    bool value() const;
    int level(int j) const { return levels_[j]; }

private:
    const IncreasingEvent* event_;
    std::vector<int> levels_;
    // table
    std::uint64_t rank_ = 0;
    std::vector<std::uint64_t> radix_pow_;
    // dnf: per-clause count of unsatisfied literals, per-coordinate clause index
    std::vector<int> unsat_;
    int satisfied_clauses_ = 0;
    struct ClauseRef {
        int clause;
        int min_level;
    };
    std::vector<std::vector<ClauseRef>> by_coord_;
    // k-of-n
    int count_at_level_ = 0;
};

/// Restartable iteration over all r^n configurations in rank order.
class ConfigRange {
public:
    ConfigRange(int n, int r);  // throws CapacityError beyond the cap

    class iterator {
    public:
        using value_type = LevelConfig;

        iterator() = default;
        iterator(int n, int r, std::uint64_t rank, std::uint64_t total);

        const LevelConfig& operator*() const { return current_; }
        iterator& operator++();
        bool operator!=(const iterator& other) const { return rank_ != other.rank_; }

    private:
        LevelConfig current_{std::vector<int>{}, 1};
        std::uint64_t rank_ = 0;
        std::uint64_t total_ = 0;
        int r_ = 1;
    };

    iterator begin() const { return iterator(n_, r_, 0, total_); }
    iterator end() const { return iterator(n_, r_, total_, total_); }
    std::uint64_t size() const { return total_; }

private:
    int n_;
    int r_;
    std::uint64_t total_;
};

/// Exhaustive monotonicity check: raising any single coordinate never flips
/// the indicator 1 -> 0.  Requires r^n within the enumeration cap.
bool check_monotone(const IncreasingEvent& event);

}  // namespace tlab
