#include "voganscan/root_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "voganscan/checked_int.hpp"
#include "voganscan/errors.hpp"

namespace voganscan {

namespace {

constexpr int kDefaultOracleCap = 2000;

std::size_t at(int node) { return static_cast<std::size_t>(node - 1); }

}  // namespace

CartanMatrix::CartanMatrix(int rank, std::vector<int> entries) : rank_(rank), entries_(std::move(entries)) {
    if (rank_ < 1 || entries_.size() != static_cast<std::size_t>(rank_) * static_cast<std::size_t>(rank_)) {
        throw DimensionError("Cartan matrix storage does not match rank");
    }
}

int CartanMatrix::operator()(int row, int col) const {
    if (row < 1 || row > rank_ || col < 1 || col > rank_) throw DimensionError("Cartan matrix index out of range");
    return entries_[at(row) * static_cast<std::size_t>(rank_) + at(col)];
}

std::int64_t CartanMatrix::apply_row(int row, std::span<const std::int64_t> v) const {
    if (v.size() != static_cast<std::size_t>(rank_)) throw DimensionError("vector length does not match rank");
    if (row < 1 || row > rank_) throw DimensionError("Cartan matrix row out of range");
    // At most four nonzero entries per row; skip the zeros.
    CheckedInt acc = 0;
    const int* r = &entries_[at(row) * static_cast<std::size_t>(rank_)];
    const int lo = std::max(1, row - 2);
    const int hi = std::min(rank_, row + 2);
    for (int col = lo; col <= hi; ++col) {
        if (r[at(col)] != 0) acc += CheckedInt(r[at(col)]) * v[at(col)];
    }
    return acc.value();
}

RootCoords CartanMatrix::apply(std::span<const std::int64_t> v) const {
    RootCoords out(static_cast<std::size_t>(rank_));
    for (int row = 1; row <= rank_; ++row) out[at(row)] = apply_row(row, v);
    return out;
}

CartanMatrix cartan_matrix(Family family, int rank) {
    require_rank(family, rank);
    const auto n = static_cast<std::size_t>(rank);
    std::vector<int> e(n * n, 0);
    auto set = [&](int r, int c, int v) { e[at(r) * n + at(c)] = v; };
    for (int i = 1; i <= rank; ++i) set(i, i, 2);
    const int chain_end = family == Family::D ? rank - 2 : rank;
    for (int i = 1; i < chain_end; ++i) {
        set(i, i + 1, -1);
        set(i + 1, i, -1);
    }
    switch (family) {
        case Family::A: break;
        case Family::B: set(rank, rank - 1, -2); break;
        case Family::C: set(rank - 1, rank, -2); break;
        case Family::D:
            for (int fork : {rank - 1, rank}) {
                set(rank - 2, fork, -1);
                set(fork, rank - 2, -1);
            }
            break;
    }
    return CartanMatrix(rank, std::move(e));
}

std::int64_t positive_root_count(Family family, int rank) {
    require_rank(family, rank);
    const std::int64_t l = rank;
    switch (family) {
        case Family::A: return l * (l + 1) / 2;
        case Family::B:
        case Family::C: return l * l;
        case Family::D: return l * (l - 1);
    }
    return 0;
}

void for_each_positive_root(Family family, int rank, const std::function<void(std::span<const int>)>& visit) {
    require_rank(family, rank);
    const int l = rank;
    std::vector<int> buf(static_cast<std::size_t>(l), 0);
    const std::span<const int> view(buf);

    // coefficient 1 on [a, b], 2 on [b+1, c], everything else zero, then
    // optional unit entries on the listed extra nodes
    auto emit = [&](int a, int b, int c, std::initializer_list<int> extra) {
        std::fill(buf.begin(), buf.end(), 0);
        for (int k = a; k <= b; ++k) buf[at(k)] = 1;
        for (int k = b + 1; k <= c; ++k) buf[at(k)] = 2;
        for (int k : extra) buf[at(k)] += 1;
        visit(view);
    };

    const int interval_top = family == Family::D ? l - 2 : l;
    for (int a = 1; a <= interval_top; ++a)
        for (int b = a; b <= interval_top; ++b) emit(a, b, b, {});

    switch (family) {
        case Family::A: break;
        case Family::B:
            for (int a = 1; a <= l - 1; ++a)
                for (int b = a; b <= l - 1; ++b) emit(a, b, l, {});
            break;
        case Family::C:
            for (int a = 1; a <= l - 1; ++a) emit(a, a - 1, l - 1, {l});
            for (int a = 1; a <= l - 2; ++a)
                for (int b = a; b <= l - 2; ++b) emit(a, b, l - 1, {l});
            break;
        case Family::D:
            emit(1, 0, 0, {l - 1});
            emit(1, 0, 0, {l});
            for (int a = 1; a <= l - 2; ++a) {
                emit(a, l - 2, l - 2, {l - 1});
                emit(a, l - 2, l - 2, {l});
                emit(a, l - 2, l - 2, {l - 1, l});
            }
            for (int a = 1; a <= l - 3; ++a)
                for (int b = a; b <= l - 3; ++b) emit(a, b, l - 2, {l - 1, l});
            break;
    }
}

std::vector<RootVector> positive_roots(Family family, int rank) {
    require_rank(family, rank);
    require_oracle_rank(rank);
    std::vector<RootVector> out;
    out.reserve(static_cast<std::size_t>(positive_root_count(family, rank)));
    for_each_positive_root(family, rank,
                           [&](std::span<const int> c) { out.push_back(RootVector{{c.begin(), c.end()}}); });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::int64_t painted_weight(std::span<const int> coeffs, const VoganDiagram& d) {
    std::int64_t s = 0;
    for (int i : d.painted()) s += coeffs[at(i)];
    return s;
}

bool avoids_painted(std::span<const int> coeffs, const VoganDiagram& d) {
    return std::all_of(d.painted().begin(), d.painted().end(), [&](int i) { return coeffs[at(i)] == 0; });
}

void accumulate(RootCoords& acc, std::span<const int> coeffs, std::int64_t scale) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0) acc[i] = checked_add(acc[i], checked_mul(scale, coeffs[i]));
    }
}

}  // namespace

int epsilon(const RootVector& root, const VoganDiagram& diagram) {
    if (root.coeffs.size() != static_cast<std::size_t>(diagram.rank())) {
        throw DimensionError("root has length " + std::to_string(root.coeffs.size()) + ", diagram rank is " +
                             std::to_string(diagram.rank()));
    }
    return painted_weight(root.coeffs, diagram) % 2 != 0 ? 1 : -1;
}

OracleSums oracle_sums(const VoganDiagram& diagram) {
    require_oracle_rank(diagram.rank());
    const auto n = static_cast<std::size_t>(diagram.rank());
    OracleSums s{RootCoords(n, 0), RootCoords(n, 0), RootCoords(n, 0), {}, {}};
    for_each_positive_root(diagram.family(), diagram.rank(), [&](std::span<const int> c) {
        const bool noncompact = painted_weight(c, diagram) % 2 != 0;
        accumulate(s.eta, c, noncompact ? -2 : 2);
        if (!noncompact) {
            accumulate(s.compact_sum, c, 1);
            if (avoids_painted(c, diagram)) accumulate(s.span_sum, c, 1);
        }
    });
    s.delta_c.resize(n);
    s.phi_s.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        s.delta_c[i] = (CheckedInt(s.compact_sum[i]) - s.span_sum[i]).value();
        s.phi_s[i] = (CheckedInt(s.eta[i]) - CheckedInt(2) * s.span_sum[i]).value();
    }
    return s;
}

RootCoords eta(const VoganDiagram& diagram) { return oracle_sums(diagram).eta; }

RootCoords delta_c(const VoganDiagram& diagram) { return oracle_sums(diagram).delta_c; }

RootCoords phi_S(const VoganDiagram& diagram) { return oracle_sums(diagram).phi_s; }

std::vector<RootVector> complement_span_roots(const VoganDiagram& diagram) {
    std::vector<RootVector> out;
    for (auto& r : positive_roots(diagram.family(), diagram.rank())) {
        if (avoids_painted(r.coeffs, diagram)) out.push_back(std::move(r));
    }
    return out;
}

std::string_view to_string(XiMethod m) noexcept {
    switch (m) {
        case XiMethod::Oracle: return "oracle";
        case XiMethod::Mid: return "mid";
        case XiMethod::Published: return "published";
    }
    return "?";
}

std::optional<XiMethod> parse_method(std::string_view s) noexcept {
    if (s == "oracle") return XiMethod::Oracle;
    if (s == "mid") return XiMethod::Mid;
    if (s == "published") return XiMethod::Published;
    return std::nullopt;
}

XiReport xi_oracle(const VoganDiagram& diagram) {
    const OracleSums s = oracle_sums(diagram);
    const CartanMatrix a = cartan_matrix(diagram.family(), diagram.rank());
    const RootCoords direct = a.apply(s.phi_s);
    const RootCoords a_compact = a.apply(s.compact_sum);
    const RootCoords a_span = a.apply(s.span_sum);

    for (std::size_t i = 0; i < direct.size(); ++i) {
        const CheckedInt lemma = CheckedInt(-4) + CheckedInt(4) * a_compact[i] - CheckedInt(2) * a_span[i];
        if (lemma.value() != direct[i]) {
            std::ostringstream os;
            os << "oracle routes disagree on " << diagram.to_string() << " at node " << i + 1 << ": A*phi gives "
               << direct[i] << ", compact/span split gives " << lemma;
            throw OracleInconsistency(os.str());
        }
    }

    XiReport r;
    r.method = XiMethod::Oracle;
    for (int i : diagram.painted()) r.on_painted.emplace(i, direct[at(i)]);
    r.full = WeightCoords{direct};
    return r;
}

int oracle_rank_cap() {
    if (const char* env = std::getenv("VOGANSCAN_ORACLE_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 1'000'000) return static_cast<int>(v);
    }
    return kDefaultOracleCap;
}

void require_oracle_rank(int rank) {
    const int cap = oracle_rank_cap();
    if (rank > cap) {
        throw CapExceeded("rank " + std::to_string(rank) + " exceeds the oracle cap " + std::to_string(cap), rank,
                          cap);
    }
}

}  // namespace voganscan
