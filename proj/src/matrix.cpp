#include "sdc/matrix.hpp"

namespace sdc {

namespace {

void require_same_shape(const RingMatrix& a, const RingMatrix& b, const char* op) {
    if (a.ring() != b.ring()) throw DomainError(std::string(op) + ": mixed-ring matrices");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DomainError(std::string(op) + ": dimension mismatch " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
}

}  // namespace

RingMatrix RingMatrix::identity(RingKind ring, std::size_t n) {
    RingMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RingMatrix RingMatrix::from_rows(const std::vector<RingVector>& rows) {
    if (rows.empty()) return {};
    RingMatrix m(rows.front().ring(), rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].ring() != m.ring_ || rows[i].size() != m.cols_)
            throw DomainError("from_rows: ragged or mixed-ring rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RingVector RingMatrix::row(std::size_t i) const {
    return RingVector(ring_, std::vector<std::uint8_t>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                                       data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RingMatrix RingMatrix::operator-() const {
    const Ring r(ring_);
    RingMatrix out = *this;
    for (auto& e : out.data_) e = r.neg(e);
    return out;
}

RingMatrix RingMatrix::operator+(const RingMatrix& other) const {
    require_same_shape(*this, other, "add");
    const Ring r(ring_);
    RingMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = r.add(data_[i], other.data_[i]);
    return out;
}

RingMatrix RingMatrix::operator-(const RingMatrix& other) const {
    require_same_shape(*this, other, "subtract");
    const Ring r(ring_);
    RingMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = r.sub(data_[i], other.data_[i]);
    return out;
}

RingMatrix RingMatrix::operator*(const RingMatrix& other) const {
    if (ring_ != other.ring_) throw DomainError("multiply: mixed-ring matrices");
    if (cols_ != other.rows_)
        throw DomainError("multiply: inner dimensions " + std::to_string(cols_) + " and " +
                          std::to_string(other.rows_));
    const Ring r(ring_);
    RingMatrix out(ring_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint8_t a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) = r.add(out(i, j), r.mul(a, other(k, j)));
        }
    return out;
}

RingMatrix RingMatrix::scaled(RingElement c) const {
    if (c.ring != ring_) throw DomainError("scale: mixed rings");
    const Ring r(ring_);
    RingMatrix out = *this;
    for (auto& e : out.data_) e = r.mul(c.value, e);
    return out;
}

bool RingMatrix::is_zero() const {
    for (auto e : data_)
        if (e != 0) return false;
    return true;
}

void RingMatrix::place(const RingMatrix& block, std::size_t r, std::size_t c) {
    if (block.ring_ != ring_) throw DomainError("place: mixed rings");
    if (r + block.rows_ > rows_ || c + block.cols_ > cols_) throw DomainError("place: block out of bounds");
    for (std::size_t i = 0; i < block.rows_; ++i)
        for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r + i, c + j) = block(i, j);
}

RingMatrix RingMatrix::block(std::size_t r, std::size_t c, std::size_t nrows, std::size_t ncols) const {
    if (r + nrows > rows_ || c + ncols > cols_) throw DomainError("block: out of bounds");
    RingMatrix out(ring_, nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(r + i, c + j);
    return out;
}

std::string RingMatrix::str() const {
    const Ring r(ring_);
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s.push_back(' ');
            s.push_back(r.symbol((*this)(i, j)));
        }
        s.push_back('\n');
    }
    return s;
}

RingMatrix lambda_circulant(const CirculantSpec& spec, ShiftConvention shift) {
    return lambda_circulant(spec.first_row, spec.lambda, shift);
}

RingMatrix lambda_circulant(const RingVector& first_row, RingElement lambda, ShiftConvention shift) {
    if (lambda.ring != first_row.ring()) throw DomainError("lambda and first row are over different rings");
    if (!is_unit(lambda)) throw DomainError("lambda '" + lambda.str() + "' is not a unit");
    const Ring r(first_row.ring());
    const std::size_t n = first_row.size();
    RingMatrix m(first_row.ring(), n, n);
    for (std::size_t j = 0; j < n; ++j) m(0, j) = first_row[j];
    for (std::size_t i = 1; i < n; ++i) {
        if (shift == ShiftConvention::RightShift) {
            m(i, 0) = r.mul(lambda.value, m(i - 1, n - 1));
            for (std::size_t j = 1; j < n; ++j) m(i, j) = m(i - 1, j - 1);
        } else {
            for (std::size_t j = 0; j + 1 < n; ++j) m(i, j) = m(i - 1, j + 1);
            m(i, n - 1) = r.mul(lambda.value, m(i - 1, 0));
        }
    }
    return m;
}

RingMatrix back_diagonal(std::size_t n, RingKind ring) {
    if (n == 0) throw DomainError("back_diagonal: n must be positive");
    RingMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
    return m;
}

bool is_symmetric_reverse_circulant(const RingMatrix& x, RingElement lambda) {
    if (!x.square() || x.ring() != lambda.ring) return false;
    if (x != x.transpose()) return false;
    const Ring r(x.ring());
    const std::size_t n = x.rows();
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j + 1 < n; ++j)
            if (x(i, j) != x(i - 1, j + 1)) return false;
        if (x(i, n - 1) != r.mul(lambda.value, x(i - 1, 0))) return false;
    }
    return true;
}

bool is_lambda_circulant(const RingMatrix& x, RingElement lambda) {
    if (!x.square() || x.ring() != lambda.ring || !is_unit(lambda)) return false;
    return x == lambda_circulant(x.row(0), lambda, ShiftConvention::RightShift);
}

}  // namespace sdc
