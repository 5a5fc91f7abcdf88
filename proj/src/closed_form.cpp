#include "voganscan/closed_form.hpp"

#include <array>
#include <sstream>

#include "voganscan/checked_int.hpp"
#include "voganscan/errors.hpp"

namespace voganscan {

namespace {

using I64 = CheckedInt;

void require_position(const VoganDiagram& d, int j) {
    if (j < 1 || j > d.m()) {
        throw IndexError("painted position " + std::to_string(j) + " outside 1.." + std::to_string(d.m()) + " for " +
                         d.to_string());
    }
}

std::int64_t ceil_half(std::int64_t n) { return n >= 0 ? (n + 1) / 2 : -((-n) / 2); }
std::int64_t floor_half(std::int64_t n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }

/// Sentinel-aware accessor used by the printed formulas. A formula that
/// reaches below i_0 is not defined as printed.
class Indices {
public:
    explicit Indices(const VoganDiagram& d) : d_(d) {}

    I64 operator()(int k) const {
        if (k < 0) {
            std::ostringstream os;
            os << "printed formula references i_" << k << " on " << d_.to_string();
            throw AmbiguousBranch(os.str());
        }
        return d_.index(k);
    }

private:
    const VoganDiagram& d_;
};

int fork_painted(const VoganDiagram& d) {
    if (d.family() != Family::D) return 0;
    return static_cast<int>(d.is_painted(d.rank() - 1)) + static_cast<int>(d.is_painted(d.rank()));
}

}  // namespace

HelperSums helper_sums(const VoganDiagram& d, int j) {
    require_position(d, j);
    const Indices i(d);
    const int m = d.m();
    const I64 l1 = I64(d.rank()) + 1;

    I64 s1 = 0, s2 = 0, t1 = 0, t2 = 0;
    for (int k = 1; k <= ceil_half(m - j); ++k) s1 += i(j + 2 * k) - i(j + 2 * k - 1);
    for (int k = 1; k <= floor_half(j); ++k) s2 += i(j - 2 * k + 1) - i(j - 2 * k);
    for (int k = 1; k <= floor_half(j + 1) - 1; ++k) t1 += i(j - 2 * k) - i(j - 2 * k - 1);
    for (int k = 1; k <= ceil_half(m - j - 1); ++k) t2 += i(j + 2 * k + 1) - i(j + 2 * k);

    I64 s_plus = i(j + 1) + I64(sign_power(m - j + 1)) * l1;
    for (int k = j + 1; k <= m; ++k) s_plus += I64(2 * sign_power(k - j)) * i(k);
    I64 s_minus = i(j - 1);
    for (int k = 1; k <= j - 1; ++k) s_minus += I64(2 * sign_power(k - j)) * i(k);

    if (s_plus != s1 - t2 || s_minus != t1 - s2) {
        std::ostringstream os;
        os << "helper sum identities fail on " << d.to_string() << " at j=" << j;
        throw OracleInconsistency(os.str());
    }
    return {s1.value(), s2.value(), t1.value(), t2.value(), s_plus.value(), s_minus.value()};
}

std::string_view to_string(Branch b) noexcept {
    switch (b) {
        case Branch::A: return "A";
        case Branch::BInterior: return "B-interior";
        case Branch::BLast: return "B-last-not-l";
        case Branch::BAtL: return "B-at-l";
        case Branch::CInteriorLUnpainted: return "C-interior-l-unpainted";
        case Branch::CInteriorLPainted: return "C-interior-l-painted";
        case Branch::CAtL: return "C-at-l";
        case Branch::CLast: return "C-last-not-l";
        case Branch::CAtLm1LPainted: return "C-at-l-1-l-painted";
        case Branch::CAtLm1LUnpainted: return "C-at-l-1-l-unpainted";
        case Branch::DInteriorEven: return "D-interior-fork-even";
        case Branch::DInteriorOdd: return "D-interior-fork-odd";
        case Branch::DLast: return "D-last";
        case Branch::DAtLm2Even: return "D-at-l-2-fork-even";
        case Branch::DAtLm2Odd: return "D-at-l-2-fork-odd";
        case Branch::DForkSingle: return "D-fork-single";
        case Branch::DForkBoth: return "D-fork-both";
    }
    return "?";
}

std::optional<Branch> parse_branch(std::string_view s) noexcept {
    for (Branch b : kAllBranches)
        if (to_string(b) == s) return b;
    return std::nullopt;
}

Family branch_family(Branch b) noexcept {
    switch (b) {
        case Branch::A: return Family::A;
        case Branch::BInterior:
        case Branch::BLast:
        case Branch::BAtL: return Family::B;
        case Branch::CInteriorLUnpainted:
        case Branch::CInteriorLPainted:
        case Branch::CAtL:
        case Branch::CLast:
        case Branch::CAtLm1LPainted:
        case Branch::CAtLm1LUnpainted: return Family::C;
        default: return Family::D;
    }
}

CaseLabel case_label(const VoganDiagram& d, int j) {
    require_position(d, j);
    const int l = d.rank();
    const int ij = d.index(j);
    const bool last = j == d.m();
    const Family f = d.family();
    switch (f) {
        case Family::A: return {f, Branch::A};
        case Family::B:
            if (ij == l) return {f, Branch::BAtL};
            if (last) return {f, Branch::BLast};
            return {f, Branch::BInterior};
        case Family::C: {
            const bool l_painted = d.is_painted(l);
            if (ij == l - 1) return {f, l_painted ? Branch::CAtLm1LPainted : Branch::CAtLm1LUnpainted};
            if (ij == l) return {f, Branch::CAtL};
            if (last) return {f, Branch::CLast};
            return {f, l_painted ? Branch::CInteriorLPainted : Branch::CInteriorLUnpainted};
        }
        case Family::D: {
            const bool odd = fork_painted(d) == 1;
            if (ij >= l - 1) return {f, odd ? Branch::DForkSingle : Branch::DForkBoth};
            if (ij == l - 2) return {f, odd ? Branch::DAtLm2Odd : Branch::DAtLm2Even};
            if (last) return {f, Branch::DLast};
            return {f, odd ? Branch::DInteriorOdd : Branch::DInteriorEven};
        }
    }
    throw std::logic_error("unreachable family");
}

std::int64_t gamma_closed(const VoganDiagram& d, int k, ForkReading reading) {
    require_position(d, k);
    const Indices i(d);
    const I64 l = d.rank();
    const int m = d.m();
    const I64 ik = i(k);
    const bool last = k == m;
    const I64 generic = i(k - 1) - i(k + 1) + 2;

    switch (d.family()) {
        case Family::A: return generic.value();
        case Family::B:
            if (!last) return generic.value();
            if (ik != l) return (I64(2) + i(m) + i(m - 1) - I64(2) * l).value();
            return (-I64(2) * l + I64(2) * i(m - 1) + 2).value();
        case Family::C:
            if (ik != l - 1) {
                if (!last) return generic.value();
                return (i(m) + i(m - 1) + 1 - I64(2) * l).value();
            }
            if (last) return (-l + i(m - 1)).value();
            return (-l + i(k - 1) + 2).value();
        case Family::D: {
            const int ln = d.rank();
            if (ik == l - 1 || ik == l) return (-I64(2) * l + I64(2) * i(k - 1) + 4).value();
            if (ik == l - 2) {
                const I64 unpainted = I64(!d.is_painted(ln - 1)) + I64(!d.is_painted(ln));
                return (-l + i(k - 1) + 3 - unpainted).value();
            }
            if (last) return (-I64(2) * l + i(m) + i(m - 1) + 3).value();
            I64 correction = 0;
            if (k == m - 1) {
                const bool a = d.is_painted(ln - 1);
                const bool b = d.is_painted(ln);
                if (reading == ForkReading::ExactlyOne) {
                    correction = (a != b) ? 1 : 0;
                } else {
                    const std::array<std::pair<bool, bool>, 2> orderings{{{a, b}, {b, a}}};
                    for (auto [nu_in, nu_prime_in] : orderings) correction += I64(nu_in && !nu_prime_in);
                }
            }
            return (generic - correction).value();
        }
    }
    throw std::logic_error("unreachable family");
}

std::int64_t tau_closed(const VoganDiagram& d, int j) {
    const CaseLabel label = case_label(d, j);
    const HelperSums h = helper_sums(d, j);
    const Indices i(d);
    const I64 l = d.rank();
    const int m = d.m();
    const I64 ij = i(j), prev = i(j - 1), next = i(j + 1);
    const I64 s1 = h.s1, s2 = h.s2, t1 = h.t1, t2 = h.t2;
    const I64 sg = sign_power(j + m);
    const I64 two = 2;

    switch (label.branch) {
        case Branch::A: return (s1 + s2 - t1 - t2).value();

        case Branch::BInterior: return (-prev + two * ij - next + two * s1 - two * t2 + sg).value();
        case Branch::BLast: return (ij - prev - 1).value();
        case Branch::BAtL: return (two * (l - i(m - 1) - 1)).value();

        case Branch::CInteriorLUnpainted: return (-prev + two * ij - next + two * (s1 - t2) + two * sg).value();
        case Branch::CInteriorLPainted: return (prev - two * ij + next + two * (s2 - t1)).value();
        case Branch::CAtL: return (s2 - t1).value();
        case Branch::CLast: return (i(m) - i(m - 1) + 1).value();
        case Branch::CAtLm1LPainted: return (I64(3) - l + prev + two * (s2 - t1)).value();
        case Branch::CAtLm1LUnpainted: return (l - prev).value();

        case Branch::DInteriorEven: return (-prev + two * ij - next + two * (s1 - t2) + two * sg).value();
        case Branch::DInteriorOdd:
            return (prev - two * ij + next + two * (s2 - t1) + I64(j == m - 1 ? 1 : 0)).value();
        case Branch::DLast: return (i(m) - i(m - 1) - 1).value();
        case Branch::DAtLm2Even: {
            const I64 both = I64(i(m - 1) == l - 1 && i(m) == l);
            return (l - 3 - prev + two * both).value();
        }
        case Branch::DAtLm2Odd: return (-ij + prev + 2 + two * (s2 - t1)).value();
        case Branch::DForkSingle: return (two * (s2 - t1)).value();
        case Branch::DForkBoth: return (l - 2 - i(m - 3)).value();
    }
    throw std::logic_error("unreachable branch");
}

std::int64_t gamma_oracle(const VoganDiagram& d, const CartanMatrix& a, const OracleSums& sums, int k) {
    require_position(d, k);
    return a.apply_row(d.index(k), sums.span_sum);
}

std::int64_t tau_oracle(const VoganDiagram& d, const CartanMatrix& a, const OracleSums& sums, int k) {
    require_position(d, k);
    return a.apply_row(d.index(k), sums.delta_c);
}

namespace {

std::int64_t compose_mid(std::int64_t gamma, std::int64_t tau) {
    return (I64(2) * (I64(-2) + gamma + I64(2) * tau)).value();
}

}  // namespace

std::int64_t xi_mid(const VoganDiagram& d, int j, MidVariant variant) {
    require_position(d, j);
    if (variant == MidVariant::ClosedForms) return compose_mid(gamma_closed(d, j), tau_closed(d, j));
    const OracleSums sums = oracle_sums(d);
    const CartanMatrix a = cartan_matrix(d.family(), d.rank());
    return compose_mid(gamma_oracle(d, a, sums, j), tau_oracle(d, a, sums, j));
}

XiReport xi_mid_all(const VoganDiagram& d, MidVariant variant) {
    XiReport r;
    r.method = XiMethod::Mid;
    if (variant == MidVariant::ClosedForms) {
        for (int j = 1; j <= d.m(); ++j) r.on_painted.emplace(d.index(j), xi_mid(d, j, variant));
        return r;
    }
    const OracleSums sums = oracle_sums(d);
    const CartanMatrix a = cartan_matrix(d.family(), d.rank());
    for (int j = 1; j <= d.m(); ++j) {
        r.on_painted.emplace(d.index(j), compose_mid(gamma_oracle(d, a, sums, j), tau_oracle(d, a, sums, j)));
    }
    return r;
}

std::pair<CaseLabel, std::int64_t> xi_published(const VoganDiagram& d, int j) {
    const CaseLabel label = case_label(d, j);
    const HelperSums h = helper_sums(d, j);
    const Indices i(d);
    const I64 l = d.rank();
    const int m = d.m();
    const I64 ij = i(j), prev = i(j - 1), next = i(j + 1);
    const I64 sp = h.s_plus, sm = h.s_minus;
    const I64 sg = sign_power(j + m);
    const I64 two = 2, three = 3, four = 4;

    I64 inner = 0;
    switch (label.branch) {
        case Branch::A: inner = prev - next + two * (sp - sm); break;

        case Branch::BInterior: inner = -prev + four * ij - three * next + four * sp + two * sg; break;
        case Branch::BLast: inner = three * i(m) - i(m - 1) - two * l - 2; break;
        case Branch::BAtL: inner = two * l - two * i(m - 1); break;

        case Branch::CInteriorLUnpainted: inner = -prev + four * ij - three * next + four * sp + four * sg; break;
        case Branch::CInteriorLPainted: inner = three * prev - four * ij + next + four * sm; break;
        case Branch::CAtL: inner = l - i(m - 1) - 3 + two * sm; break;
        case Branch::CLast: inner = three * i(m) - i(m - 1) - two * l + 1; break;
        case Branch::CAtLm1LPainted: inner = l + three * prev + 6 + four * sm; break;
        case Branch::CAtLm1LUnpainted: inner = l - prev; break;

        case Branch::DInteriorEven: inner = -prev + four * ij - three * next + four * (sp + sg); break;
        case Branch::DInteriorOdd: inner = three * prev - four * ij + next + four * sm + I64(j == m - 1 ? 1 : 0); break;
        case Branch::DLast: inner = -two * l + three * i(m) - i(m - 1) - 1; break;
        case Branch::DAtLm2Even: {
            const int ln = d.rank();
            const I64 both = I64(i(m - 1) == l - 1 && i(m) == l);
            const I64 neither = I64(!d.is_painted(ln - 1) && !d.is_painted(ln));
            inner = l - prev - 5 + two * (two * both - neither);
            break;
        }
        case Branch::DAtLm2Odd: inner = -three * l + three * prev + 8 + four * sm; break;
        case Branch::DForkSingle: inner = -two * l + two * prev + 2 + four * sm; break;
        case Branch::DForkBoth: inner = l - 4 - i(m - 2); break;
    }
    return {label, (two * inner).value()};
}

XiReport xi_published_all(const VoganDiagram& d) {
    XiReport r;
    r.method = XiMethod::Published;
    for (int j = 1; j <= d.m(); ++j) r.on_painted.emplace(d.index(j), xi_published(d, j).second);
    return r;
}

}  // namespace voganscan
