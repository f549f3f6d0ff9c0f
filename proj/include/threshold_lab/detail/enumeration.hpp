#pragma once

#include <span>
#include <vector>

namespace tlab::detail {

/// Mixed-radix walk over {1,...,r}^n in rank order (coordinate 0 least
/// significant), maintaining the product weight prod_j p[levels[j]]
/// incrementally via suffix products -- one multiply per changed coordinate,
/// amortized O(1) per step, no divisions.
///
/// An optional `skip` coordinate is excluded from both the walk and the
/// weight; its level is owned by the caller.  Every level change is forwarded
/// to the sink's set_level(j, level) so an EventCursor can ride along.
template <typename Sink>
class WeightedWalk {
public:
    /// p is 1-based: p[k] for k in [1, r].
    WeightedWalk(int n, int r, std::span<const double> p, Sink& sink, int skip = -1)
        : n_(n), r_(r), p_(p), sink_(&sink), skip_(skip), levels_(n, 1), suffix_(n + 1, 1.0) {
        for (int j = n_ - 1; j >= 0; --j)
            suffix_[j] = (j == skip_) ? suffix_[j + 1] : p_[1] * suffix_[j + 1];
        for (int j = 0; j < n_; ++j)
            if (j != skip_) sink_->set_level(j, 1);
    }

    bool done() const { return done_; }
    double weight() const { return suffix_[0]; }
    std::span<const int> levels() const { return levels_; }

    void advance() {
        int c = 0;
        while (c < n_ && (c == skip_ || levels_[c] == r_)) {
            if (c != skip_ && levels_[c] != 1) {
                levels_[c] = 1;
                sink_->set_level(c, 1);
            }
            ++c;
        }
        if (c == n_) {
            done_ = true;
            return;
        }
        ++levels_[c];
        sink_->set_level(c, levels_[c]);
        suffix_[c] = p_[levels_[c]] * suffix_[c + 1];
        for (int j = c - 1; j >= 0; --j)
            suffix_[j] = (j == skip_) ? suffix_[j + 1] : p_[1] * suffix_[j + 1];
    }

private:
    int n_;
    int r_;
    std::span<const double> p_;
    Sink* sink_;
    int skip_;
    std::vector<int> levels_;
    std::vector<double> suffix_;
    bool done_ = false;
};

struct NullSink {
    void set_level(int, int) {}
};

}  // namespace tlab::detail
