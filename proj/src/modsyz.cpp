#include "reeskit/modsyz.hpp"

#include <mutex>
#include <sstream>

#include "engine.hpp"

namespace reeskit {

PolyMatrix::PolyMatrix(AffineRingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      a_(rows * cols, Poly::zero(ring_->ambient())) {}

PolyMatrix PolyMatrix::from_columns(AffineRingPtr ring, std::size_t rows,
                                    const std::vector<Vec>& cols) {
    PolyMatrix m(ring, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw DimensionError("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
}

PolyMatrix PolyMatrix::identity(AffineRingPtr ring, std::size_t n) {
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Poly::constant(ring->ambient(), 1));
    return m;
}

void PolyMatrix::set(std::size_t i, std::size_t j, Poly p) {
    a_[i * cols_ + j] = ring_->nf(p);
}

Vec PolyMatrix::column(std::size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

std::vector<Vec> PolyMatrix::columns() const {
    std::vector<Vec> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

Vec PolyMatrix::mul_vec(const Vec& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
    Vec out(rows_, Poly::zero(ring_->ambient()));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out[i] = out[i] + at(i, j) * v[j];
        out[i] = ring_->nf(out[i]);
    }
    return out;
}

PolyMatrix PolyMatrix::mul(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product size mismatch");
    PolyMatrix m(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < o.cols_; ++j) {
            Poly s = Poly::zero(ring_->ambient());
            for (std::size_t k = 0; k < cols_; ++k) s = s + at(i, k) * o.at(k, j);
            m.set(i, j, s);
        }
    }
    return m;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix m(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
    return m;
}

PolyMatrix PolyMatrix::drop_zero_columns() const {
    std::vector<Vec> keep;
    for (std::size_t j = 0; j < cols_; ++j) {
        Vec c = column(j);
        if (!engine::vec_is_zero(c)) keep.push_back(std::move(c));
    }
    return from_columns(ring_, rows_, keep);
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::string PolyMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ",";
            os << at(i, j).str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

// generators plus defining-ideal multiples of the unit vectors
std::vector<Vec> lifted_module_gens(const AffineRingPtr& ring, std::size_t rank,
                                    const std::vector<Vec>& gens) {
    std::vector<Vec> out = gens;
    for (const auto& g : ring->defining()) {
        for (std::size_t i = 0; i < rank; ++i) {
            Vec v(rank, Poly::zero(ring->ambient()));
            v[i] = g;
            out.push_back(std::move(v));
        }
    }
    return out;
}

} // namespace

struct Submodule::Cache {
    std::mutex mu;
    std::optional<engine::GBResult> gb;
    std::size_t ngens = 0;  // original generator count inside the tracked input
};

Submodule::Submodule(AffineRingPtr ring, std::size_t rank, std::vector<Vec> gens)
    : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)),
      cache_(std::make_shared<Cache>()) {}

Submodule Submodule::make(AffineRingPtr ring, std::size_t rank, std::vector<Vec> gens) {
    std::vector<Vec> normalized;
    for (auto& g : gens) {
        if (g.size() != rank) throw DimensionError("submodule generator rank mismatch");
        Vec v;
        v.reserve(rank);
        for (auto& c : g) v.push_back(ring->nf(c));
        if (!engine::vec_is_zero(v)) normalized.push_back(std::move(v));
    }
    return Submodule(std::move(ring), rank, std::move(normalized));
}

namespace {

const engine::GBResult& submodule_gb(const AffineRingPtr& ring, std::size_t rank,
                                     const std::vector<Vec>& gens, Submodule::Cache& cache) {
    std::lock_guard<std::mutex> lock(cache.mu);
    if (!cache.gb) {
        auto lifted = lifted_module_gens(ring, rank, gens);
        cache.ngens = gens.size();
        engine::ModOrder o{ring->ambient(), {}};
        cache.gb = engine::buchberger(o, lifted, rank, true);
    }
    return *cache.gb;
}

} // namespace

std::vector<Vec> Submodule::module_gb() const {
    return submodule_gb(ring_, rank_, gens_, *cache_).basis;
}

Vec Submodule::reduce(const Vec& v) const {
    if (v.size() != rank_) throw DimensionError("element rank mismatch");
    Vec in;
    in.reserve(rank_);
    for (const auto& c : v) in.push_back(ring_->nf(c));
    engine::ModOrder o{ring_->ambient(), {}};
    const auto& gb = submodule_gb(ring_, rank_, gens_, *cache_);
    return engine::normal_form(o, in, gb.basis, false).remainder;
}

bool Submodule::contains(const Vec& v) const { return engine::vec_is_zero(reduce(v)); }

std::optional<std::vector<Poly>> Submodule::express(const Vec& v) const {
    if (v.size() != rank_) throw DimensionError("element rank mismatch");
    Vec in;
    in.reserve(rank_);
    for (const auto& c : v) in.push_back(ring_->nf(c));
    engine::ModOrder o{ring_->ambient(), {}};
    const auto& gb = submodule_gb(ring_, rank_, gens_, *cache_);
    auto lifted_count = gens_.size() + ring_->defining().size() * rank_;
    auto coeffs = engine::lift_through(o, in, gb, lifted_count);
    if (!coeffs) return std::nullopt;
    std::vector<Poly> out;
    out.reserve(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) out.push_back(ring_->nf((*coeffs)[i]));
    return out;
}

PolyMatrix syzygies(const PolyMatrix& m) {
    const auto& ring = m.ring();
    std::size_t n = m.nrows(), k = m.ncols();
    // augment each column with its unit tail; defining multiples carry no tail
    std::vector<Vec> aug;
    for (std::size_t j = 0; j < k; ++j) {
        Vec v(n + k, Poly::zero(ring->ambient()));
        for (std::size_t i = 0; i < n; ++i) v[i] = m.at(i, j);
        v[n + j] = Poly::constant(ring->ambient(), 1);
        aug.push_back(std::move(v));
    }
    for (const auto& g : ring->defining()) {
        for (std::size_t i = 0; i < n; ++i) {
            Vec v(n + k, Poly::zero(ring->ambient()));
            v[i] = g;
            aug.push_back(std::move(v));
        }
    }
    engine::ModOrder o{ring->ambient(), {}};
    auto gb = engine::buchberger(o, aug, n + k, false);

    std::vector<Vec> cols;
    for (const auto& b : gb.basis) {
        bool head_zero = true;
        for (std::size_t i = 0; i < n && head_zero; ++i)
            if (!b[i].is_zero()) head_zero = false;
        if (!head_zero) continue;
        Vec tail;
        tail.reserve(k);
        for (std::size_t j = 0; j < k; ++j) tail.push_back(ring->nf(b[n + j]));
        if (!engine::vec_is_zero(tail)) cols.push_back(std::move(tail));
    }
    return PolyMatrix::from_columns(ring, k, cols);
}

Submodule kernel_of_free_map(const PolyMatrix& m) {
    PolyMatrix syz = syzygies(m);
    return Submodule::make(m.ring(), m.ncols(), syz.columns());
}

} // namespace reeskit
