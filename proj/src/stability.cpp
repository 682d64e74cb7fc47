#include "qmod/stability.hpp"

#include <algorithm>

#include "qmod/errors.hpp"

namespace qmod {

ExtDimVector HNType::weight() const {
    ExtDimVector w;
    if (steps.empty()) return w;
    w.s = 0;
    w.d.assign(steps[0].d.size(), 0);
    for (const ExtDimVector& st : steps) {
        w.s += st.s;
        for (std::size_t i = 0; i < w.d.size(); ++i) w.d[i] += st.d[i];
    }
    return w;
}

std::string HNType::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) out += " > ";
        out += steps[i].to_string();
    }
    return out;
}

GammaAnswer TableGammaOracle::answer(const ExtDimVector& v) {
    auto it = table_.find(v);
    if (it != table_.end()) {
        return GammaAnswer{it->second, it->second ? v.d : DimVector{}, "table"};
    }
    if (fallback_) return fallback_->answer(v);
    throw AssumptionError("gamma oracle has no answer for " + v.to_string());
}

StabilityContext::StabilityContext(const ExtensionData& ext, GammaOracle& gamma)
    : ext_(ext), gamma_(gamma) {}

bool StabilityContext::is_semistable_type(const ExtDimVector& v) {
    validate_dim_type(ext_, v);
    auto it = sst_memo_.find(v);
    if (it != sst_memo_.end()) return it->second;
    const bool ans = semistable_uncached(v);
    sst_memo_[v] = ans;
    return ans;
}

bool StabilityContext::semistable_uncached(const ExtDimVector& v) {
    // s = 0 with d != 0: the structure map cannot be surjective, and the
    // generic rank condition gamma = d fails immediately.
    if (v.s == 0) return false;
    if (!ext_.assume_rigid) {
        throw AssumptionError("the semistability criterion needs Ext(T,T) = 0 asserted "
                              "(assume_rigid)");
    }
    if (dim_is_zero(v.d)) return true;  // gamma trivial, H empty
    // Cheap necessary bound before consulting the oracle: the rank of a map
    // from (T^s)_i is at most s*t_i.
    for (std::size_t i = 0; i < v.d.size(); ++i) {
        if (v.d[i] > v.s * ext_.t[i]) return false;
    }
    if (!gamma_.answer(v).full) return false;
    for (const HNType& hn : enumerate_hn_types(v)) {
        bool all_zero = true;
        for (std::size_t n = 0; n + 1 < hn.steps.size() && all_zero; ++n) {
            for (std::size_t l = n + 1; l < hn.steps.size(); ++l) {
                if (euler_form_ext(ext_, hn.steps[n], hn.steps[l]) != 0) {
                    all_zero = false;
                    break;
                }
            }
        }
        if (all_zero) return false;
    }
    return true;
}

std::vector<HNType> StabilityContext::enumerate_hn_types(const ExtDimVector& v) {
    validate_dim_type(ext_, v);
    auto it = hn_memo_.find(v);
    if (it != hn_memo_.end()) return it->second;

    std::vector<HNType> out;
    std::vector<ExtDimVector> prefix;

    // Depth-first over candidate steps in lexicographic order. Every step
    // has s >= 1 (slopes strictly decrease and the last is positive), so
    // capping the first step at s-1 bounds every step's s-part below v.s and
    // all recursive semistability queries are on strictly smaller s.
    auto extend = [&](auto&& self, const ExtDimVector& left, const Frac64* prev_slope) -> void {
        if (left.is_zero()) {
            if (prefix.size() >= 2) out.push_back(HNType{prefix});
            return;
        }
        if (left.s == 0) return;  // remaining d can never be consumed
        const int s_max = prefix.empty() ? left.s - 1 : left.s;
        for (int s1 = 1; s1 <= s_max; ++s1) {
            // Box of admissible d-parts: within what is left and within the
            // rank bound d <= s*t needed for the step's gamma-condition.
            DimVector box(left.d.size());
            for (std::size_t i = 0; i < box.size(); ++i) {
                box[i] = std::min(left.d[i], s1 * ext_.t[i]);
            }
            DimVector d1(box.size(), 0);
            while (true) {
                const ExtDimVector step{s1, d1};
                const Frac64 mu = slope(step);
                if ((!prev_slope || mu < *prev_slope) && is_semistable_type(step)) {
                    prefix.push_back(step);
                    ExtDimVector rest{left.s - s1, dim_sub(left.d, d1)};
                    self(self, rest, &mu);
                    prefix.pop_back();
                }
                // next d1 in the box, lexicographic (last index fastest)
                int i = static_cast<int>(d1.size()) - 1;
                while (i >= 0 && d1[i] == box[i]) { d1[i] = 0; --i; }
                if (i < 0) break;
                ++d1[i];
            }
        }
    };
    extend(extend, v, nullptr);

    hn_memo_[v] = out;
    return out;
}

bool StabilityContext::stable_equals_semistable(const ExtDimVector& v) {
    if (!is_semistable_type(v)) {
        throw AssumptionError("stable_equals_semistable needs a semistable type, got " +
                              v.to_string());
    }
    const std::int64_t tot = v.total();
    // Walk all proper nonzero componentwise summands w <= v of equal slope.
    DimVector d(v.d.size(), 0);
    for (int s1 = 0; s1 <= v.s; ++s1) {
        std::fill(d.begin(), d.end(), 0);
        while (true) {
            const ExtDimVector w{s1, d};
            if (!w.is_zero() && w != v) {
                // slope(w) == slope(v) cross-multiplied
                if (std::int64_t(w.s) * tot == std::int64_t(v.s) * w.total()) {
                    const ExtDimVector rest{v.s - s1, dim_sub(v.d, d)};
                    if (is_semistable_type(w) && is_semistable_type(rest)) return false;
                }
            }
            int i = static_cast<int>(d.size()) - 1;
            while (i >= 0 && d[i] == v.d[i]) { d[i] = 0; --i; }
            if (i < 0) break;
            ++d[i];
        }
    }
    return true;
}

std::int64_t StabilityContext::hn_stratum_codim(const HNType& hn) const {
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < hn.steps.size(); ++k) {
        for (std::size_t l = k + 1; l < hn.steps.size(); ++l) {
            sum += euler_form_ext(ext_, hn.steps[k], hn.steps[l]);
        }
    }
    return -sum;
}

std::int64_t StabilityContext::hn_exponent(const HNType& hn) const {
    const Quiver& q = ext_.quiver;
    std::int64_t sum = 0;
    for (std::size_t n = 0; n < hn.steps.size(); ++n) {
        for (std::size_t l = n + 1; l < hn.steps.size(); ++l) {
            const DimVector& dn = hn.steps[n].d;
            const DimVector& dl = hn.steps[l].d;
            for (const Arrow& a : q.arrows()) {
                sum += std::int64_t(dl[a.source]) * dn[a.target];
            }
            sum += std::int64_t(hn.steps[l].s) * euler_form_q(q, ext_.t, dn);
        }
    }
    return sum;
}

}  // namespace qmod
