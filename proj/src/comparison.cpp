#include <mmsim/comparison.hpp>

#include <mmsim/errors.hpp>

#include <cmath>

namespace mmsim {

namespace {

double channel_value(const TrajectoryRecord &r, std::size_t i) {
    if (i < 6) {
        return r.eta(static_cast<Eigen::Index>(i));
    }
    if (i < 12) {
        return r.nu(static_cast<Eigen::Index>(i - 6));
    }
    if (i < 15) {
        return r.r_p(static_cast<Eigen::Index>(i - 12));
    }
    return r.v_p(static_cast<Eigen::Index>(i - 15));
}

int sign_of(double x) {
    return (x > 0.0) - (x < 0.0);
}

} // namespace

const std::vector<std::string> &state_channel_names() {
    static const std::vector<std::string> names{"x", "y", "z", "phi", "theta", "psi", "u", "v", "w",
                                                "p", "q", "r", "x_p", "y_p", "z_p", "vpx", "vpy", "vpz"};
    return names;
}

const ChannelDifference &ComparisonReport::channel(const std::string &name) const {
    for (const auto &c : channels) {
        if (c.name == name) {
            return c;
        }
    }
    throw std::out_of_range("no comparison channel named " + name);
}

ComparisonReport compare_trajectories(const std::vector<TrajectoryRecord> &a, const std::vector<TrajectoryRecord> &b,
                                      const ComparisonWindow &window) {
    std::vector<std::size_t> ia, ib;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].t >= window.t_begin && a[i].t <= window.t_end) {
            ia.push_back(i);
        }
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i].t >= window.t_begin && b[i].t <= window.t_end) {
            ib.push_back(i);
        }
    }
    if (ia.size() != ib.size()) {
        throw GridMismatch("runs have " + std::to_string(ia.size()) + " and " + std::to_string(ib.size()) +
                           " samples in the comparison window");
    }
    for (std::size_t k = 0; k < ia.size(); ++k) {
        if (a[ia[k]].t != b[ib[k]].t) {
            throw GridMismatch("time grids differ at sample " + std::to_string(k));
        }
    }

    const auto &names = state_channel_names();
    ComparisonReport report;
    report.samples = ia.size();
    for (std::size_t c = 0; c < names.size(); ++c) {
        ChannelDifference d;
        d.name = names[c];
        double sum = 0.0;
        int prev_a = 0, prev_b = 0;
        for (std::size_t k = 0; k < ia.size(); ++k) {
            const double va = channel_value(a[ia[k]], c);
            const double vb = channel_value(b[ib[k]], c);
            const double diff = std::abs(va - vb);
            d.max_abs = std::max(d.max_abs, diff);
            sum += diff;
            d.peak_abs_a = std::max(d.peak_abs_a, std::abs(va));
            d.peak_abs_b = std::max(d.peak_abs_b, std::abs(vb));
            const int sa = sign_of(va), sb = sign_of(vb);
            if (sa != 0) {
                d.sign_changes_a += (prev_a != 0 && sa != prev_a);
                prev_a = sa;
            }
            if (sb != 0) {
                d.sign_changes_b += (prev_b != 0 && sb != prev_b);
                prev_b = sb;
            }
        }
        d.mean_abs = ia.empty() ? 0.0 : sum / static_cast<double>(ia.size());
        report.max_state_difference = std::max(report.max_state_difference, d.max_abs);
        report.channels.push_back(d);
    }
    return report;
}

} // namespace mmsim
