#include "threshold_lab/product_space.hpp"

#include <algorithm>
#include <utility>

#include "threshold_lab/capacity.hpp"
#include "threshold_lab/errors.hpp"

namespace tlab {

namespace {

void require_level_in_range(int k, int r, const char* what) {
    if (k < 1 || k > r)
        throw InputError(std::string("product_space: ") + what + " level " + std::to_string(k) +
                         " outside [1, " + std::to_string(r) + "]");
}

void require_coord_in_range(int j, int n) {
    if (j < 0 || j >= n)
        throw InputError("product_space: coordinate " + std::to_string(j) + " outside [0, " +
                         std::to_string(n) + ")");
}

}  // namespace

LevelConfig::LevelConfig(std::vector<int> levels, int r) : levels_(std::move(levels)), r_(r) {
    if (r_ < 1) throw InputError("product_space: alphabet size r must be >= 1");
    for (int k : levels_) require_level_in_range(k, r_, "configuration");
}

int LevelConfig::level(int j) const {
    require_coord_in_range(j, n());
    return levels_[j];
}

LevelConfig LevelConfig::with_level(int j, int k) const {
    require_coord_in_range(j, n());
    require_level_in_range(k, r_, "target");
    LevelConfig out = *this;
    out.levels_[j] = k;
    return out;
}

std::uint64_t LevelConfig::rank() const {
    std::uint64_t rank = 0;
    for (int j = n() - 1; j >= 0; --j) rank = rank * r_ + (levels_[j] - 1);
    return rank;
}

LevelConfig LevelConfig::from_rank(std::uint64_t rank, int n, int r) {
    if (r < 1 || n < 0) throw InputError("product_space: invalid (n, r)");
    const std::uint64_t total = pow_sat(r, n);
    if (rank >= total) throw InputError("product_space: rank out of range");
    std::vector<int> levels(n);
    for (int j = 0; j < n; ++j) {
        levels[j] = static_cast<int>(rank % r) + 1;
        rank /= r;
    }
    return LevelConfig(std::move(levels), r);
}

IncreasingEvent::IncreasingEvent(int n, int r, detail::EventRep rep, std::string description)
    : n_(n), r_(r), rep_(std::move(rep)), description_(std::move(description)) {
    if (n_ < 1) throw InputError("product_space: event needs n >= 1");
    if (r_ < 2) throw InputError("product_space: event needs r >= 2");
}

bool IncreasingEvent::contains(std::span<const int> levels) const {
    if (static_cast<int>(levels.size()) != n_)
        throw InputError("product_space: configuration has " + std::to_string(levels.size()) +
                         " coordinates, event expects " + std::to_string(n_));
    if (const auto* t = std::get_if<detail::TableRep>(&rep_)) {
        std::uint64_t rank = 0;
        for (int j = n_ - 1; j >= 0; --j) {
            require_level_in_range(levels[j], r_, "configuration");
            rank = rank * r_ + (levels[j] - 1);
        }
        return t->test(rank);
    }
    for (int j = 0; j < n_; ++j) require_level_in_range(levels[j], r_, "configuration");
    if (const auto* d = std::get_if<detail::DnfRep>(&rep_)) {
        for (const auto& clause : d->clauses) {
            bool sat = true;
            for (const auto& lit : clause.literals) {
                if (levels[lit.coord] < lit.min_level) {
                    sat = false;
                    break;
                }
            }
            if (sat) return true;
        }
        return false;
    }
    const auto& k = std::get<detail::KOfNRep>(rep_);
    int count = 0;
    for (int j = 0; j < n_; ++j) count += levels[j] >= k.level;
    return count >= k.k;
}

bool IncreasingEvent::contains(const LevelConfig& x) const {
    if (x.r() != r_)
        throw InputError("product_space: configuration alphabet r=" + std::to_string(x.r()) +
                         " does not match event r=" + std::to_string(r_));
    return contains(x.levels());
}

IncreasingEvent IncreasingEvent::from_dnf(int n, int r, std::vector<MonotoneClause> clauses,
                                          std::string description) {
    for (const auto& clause : clauses) {
        if (clause.literals.empty())
            throw InputError("product_space: empty clause (would match everything)");
        for (const auto& lit : clause.literals) {
            require_coord_in_range(lit.coord, n);
            if (lit.min_level < 2 || lit.min_level > r)
                throw InputError("product_space: clause min_level " +
                                 std::to_string(lit.min_level) + " outside [2, " +
                                 std::to_string(r) + "]");
        }
    }
    return IncreasingEvent(n, r, detail::DnfRep{std::move(clauses)}, std::move(description));
}

IncreasingEvent IncreasingEvent::from_table(int n, int r, const std::vector<bool>& table) {
    const std::uint64_t total = pow_sat(r, n);
    require_within_cap(total, "product_space");
    if (table.size() != total)
        throw InputError("product_space: truth table has " + std::to_string(table.size()) +
                         " entries, expected r^n = " + std::to_string(total));
    detail::TableRep rep;
    rep.bits.assign((total + 63) / 64, 0);
    for (std::uint64_t i = 0; i < total; ++i)
        if (table[i]) rep.bits[i >> 6] |= std::uint64_t{1} << (i & 63);
    return IncreasingEvent(n, r, std::move(rep), "table");
}

IncreasingEvent IncreasingEvent::dictator(int n, int r, int j, int level) {
    require_coord_in_range(j, n);
    if (level < 2 || level > r) throw InputError("product_space: dictator level outside [2, r]");
    MonotoneClause c{{{j, level}}};
    return from_dnf(n, r, {c}, "dictator(" + std::to_string(j) + ")");
}

IncreasingEvent IncreasingEvent::k_of_n(int n, int r, int k, int level) {
    if (k < 1 || k > n) throw InputError("product_space: k outside [1, n]");
    if (level < 2 || level > r) throw InputError("product_space: k_of_n level outside [2, r]");
    return IncreasingEvent(n, r, detail::KOfNRep{k, level},
                           std::to_string(k) + "-of-" + std::to_string(n) + "@" +
                               std::to_string(level));
}

IncreasingEvent IncreasingEvent::majority(int n, int r, int level) {
    if (n % 2 == 0) throw InputError("product_space: majority needs odd n");
    return k_of_n(n, r, (n + 1) / 2, level);
}

IncreasingEvent IncreasingEvent::tribes(int block, int blocks, int r, int level) {
    if (block < 1 || blocks < 1) throw InputError("product_space: tribes needs positive sizes");
    const int n = block * blocks;
    std::vector<MonotoneClause> clauses(blocks);
    for (int b = 0; b < blocks; ++b)
        for (int i = 0; i < block; ++i) clauses[b].literals.push_back({b * block + i, level});
    auto event = from_dnf(n, r, std::move(clauses),
                          "tribes(" + std::to_string(block) + "x" + std::to_string(blocks) + ")");
    return event;
}

std::vector<bool> IncreasingEvent::to_table() const {
    const std::uint64_t total = pow_sat(r_, n_);
    require_within_cap(total, "product_space");
    std::vector<bool> table(total);
    EventCursor cur = cursor();
    std::vector<int> levels(n_, 1);
    cur.reset(levels);
    for (std::uint64_t rank = 0;; ++rank) {
        table[rank] = cur.value();
        int j = 0;
        while (j < n_ && levels[j] == r_) {
            levels[j] = 1;
            cur.set_level(j, 1);
            ++j;
        }
        if (j == n_) break;
        ++levels[j];
        cur.set_level(j, levels[j]);
    }
    return table;
}

EventCursor IncreasingEvent::cursor() const { return EventCursor(*this); }

EventCursor::EventCursor(const IncreasingEvent& event) : event_(&event) {
    const int n = event.n();
    levels_.assign(n, 1);
    if (std::holds_alternative<detail::TableRep>(event.rep())) {
        radix_pow_.resize(n);
        std::uint64_t p = 1;
        for (int j = 0; j < n; ++j) {
            radix_pow_[j] = p;
            p *= event.r();
        }
    } else if (const auto* d = std::get_if<detail::DnfRep>(&event.rep())) {
        unsat_.resize(d->clauses.size());
        by_coord_.resize(n);
        for (int c = 0; c < static_cast<int>(d->clauses.size()); ++c)
            for (const auto& lit : d->clauses[c].literals)
                by_coord_[lit.coord].push_back({c, lit.min_level});
    }
    reset(levels_);
}

void EventCursor::reset(std::span<const int> levels) {
    levels_.assign(levels.begin(), levels.end());
    if (const auto* t = std::get_if<detail::TableRep>(&event_->rep())) {
        (void)t;
        rank_ = 0;
        for (int j = event_->n() - 1; j >= 0; --j) rank_ = rank_ * event_->r() + (levels_[j] - 1);
    } else if (const auto* d = std::get_if<detail::DnfRep>(&event_->rep())) {
        satisfied_clauses_ = 0;
        for (int c = 0; c < static_cast<int>(d->clauses.size()); ++c) {
            int unsat = 0;
            for (const auto& lit : d->clauses[c].literals)
                unsat += levels_[lit.coord] < lit.min_level;
            unsat_[c] = unsat;
            satisfied_clauses_ += unsat == 0;
        }
    } else {
        const auto& k = std::get<detail::KOfNRep>(event_->rep());
        count_at_level_ = 0;
        for (int lv : levels_) count_at_level_ += lv >= k.level;
    }
}

void EventCursor::set_level(int j, int level) {
    const int old = levels_[j];
    if (old == level) return;
    levels_[j] = level;
    if (std::holds_alternative<detail::TableRep>(event_->rep())) {
        rank_ += (static_cast<std::int64_t>(level) - old) * static_cast<std::int64_t>(radix_pow_[j]);
    } else if (std::holds_alternative<detail::DnfRep>(event_->rep())) {
        for (const auto& ref : by_coord_[j]) {
            const bool was = old >= ref.min_level;
            const bool now = level >= ref.min_level;
            if (was == now) continue;
            if (now) {
                if (--unsat_[ref.clause] == 0) ++satisfied_clauses_;
            } else {
                if (unsat_[ref.clause]++ == 0) --satisfied_clauses_;
            }
        }
    } else {
        const auto& k = std::get<detail::KOfNRep>(event_->rep());
        count_at_level_ += (level >= k.level) - (old >= k.level);
    }
}

bool EventCursor::value() const {
    if (const auto* t = std::get_if<detail::TableRep>(&event_->rep())) return t->test(rank_);
    if (std::holds_alternative<detail::DnfRep>(event_->rep())) return satisfied_clauses_ > 0;
    return count_at_level_ >= std::get<detail::KOfNRep>(event_->rep()).k;
}

ConfigRange::ConfigRange(int n, int r) : n_(n), r_(r), total_(pow_sat(r, n)) {
    if (n < 0 || r < 1) throw InputError("product_space: invalid (n, r)");
    require_within_cap(total_, "product_space");
}

ConfigRange::iterator::iterator(int n, int r, std::uint64_t rank, std::uint64_t total)
    : rank_(rank), total_(total), r_(r) {
    if (rank_ < total_) current_ = LevelConfig::from_rank(rank_, n, r);
}

ConfigRange::iterator& ConfigRange::iterator::operator++() {
    ++rank_;
    if (rank_ < total_) current_ = LevelConfig::from_rank(rank_, current_.n(), r_);
    return *this;
}

bool check_monotone(const IncreasingEvent& event) {
    const int n = event.n();
    const int r = event.r();
    require_within_cap(pow_sat(r, n), "product_space");
    EventCursor cur = event.cursor();
    std::vector<int> levels(n, 1);
    cur.reset(levels);
    for (;;) {
        const bool here = cur.value();
        if (here) {
            // 1 -> 0 along any raised coordinate would break monotonicity.
            for (int j = 0; j < n; ++j) {
                if (levels[j] == r) continue;
                cur.set_level(j, levels[j] + 1);
                const bool up = cur.value();
                cur.set_level(j, levels[j]);
                if (!up) return false;
            }
        }
        int j = 0;
        while (j < n && levels[j] == r) {
            levels[j] = 1;
            cur.set_level(j, 1);
            ++j;
        }
        if (j == n) break;
        ++levels[j];
        cur.set_level(j, levels[j]);
    }
    return true;
}

}  // namespace tlab
