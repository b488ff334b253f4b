#include "rampw/linear_code.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rampw/errors.hpp"

namespace rampw {

LinearCode::LinearCode(FieldRef, size_t n, Matrix rref_gen, std::vector<size_t> pivots)
    : n_(n), gen_(std::move(rref_gen)), pivots_(std::move(pivots)) {}

LinearCode LinearCode::from_spanning_rows(const Matrix& spanning_rows) {
    auto r = rref(spanning_rows, true);
    return LinearCode(spanning_rows.field(), spanning_rows.cols(), std::move(r.matrix),
                      std::move(r.pivots));
}

LinearCode LinearCode::zero(FieldRef field, size_t n) {
    return LinearCode(field, n, Matrix(field, 0, n), {});
}

LinearCode LinearCode::full(FieldRef field, size_t n) {
    return LinearCode(field, n, Matrix::identity(field, n), [n] {
        std::vector<size_t> p(n);
        for (size_t i = 0; i < n; ++i) p[i] = i;
        return p;
    }());
}

bool LinearCode::contains(const std::vector<uint8_t>& word) const {
    if (word.size() != n_) throw std::invalid_argument("LinearCode::contains: length mismatch");
    RrefResult r{gen_, k(), pivots_};
    return rref_contains(r, word);
}

bool LinearCode::contains_code(const LinearCode& other) const {
    if (other.n_ != n_ || other.field().get() != field().get()) return false;
    for (size_t i = 0; i < other.k(); ++i)
        if (!contains(other.gen_.row_vec(i))) return false;
    return true;
}

std::vector<uint8_t> LinearCode::encode(const std::vector<uint8_t>& message) const {
    if (message.size() != k()) throw std::invalid_argument("LinearCode::encode: message length != k");
    const FieldSpec& f = *field();
    std::vector<uint8_t> word(n_, 0);
    for (size_t i = 0; i < k(); ++i) {
        if (message[i] == 0) continue;
        const uint8_t* row = gen_.row(i);
        for (size_t j = 0; j < n_; ++j) word[j] = f.add(word[j], f.mul(message[i], row[j]));
    }
    return word;
}

LinearCode dual(const LinearCode& c) {
    if (c.k() == 0) return LinearCode::full(c.field(), c.n());
    return LinearCode::from_spanning_rows(null_space(c.generator()));
}

LinearCode intersect_coordinate_subspace(const LinearCode& c, const std::vector<size_t>& I) {
    std::vector<bool> in_I(c.n(), false);
    for (size_t i : I) {
        if (i >= c.n()) throw std::invalid_argument("intersect_coordinate_subspace: index out of range");
        in_I[i] = true;
    }
    std::vector<size_t> outside;
    for (size_t j = 0; j < c.n(); ++j)
        if (!in_I[j]) outside.push_back(j);
    if (c.k() == 0) return LinearCode::zero(c.field(), c.n());
    // Messages x with (xG)_j = 0 outside I, i.e. the left kernel of G's
    // outside-columns block.
    Matrix block_t = c.generator().select_columns(outside).transpose();
    Matrix kernel = null_space(block_t);  // rows: valid messages
    return LinearCode::from_spanning_rows(kernel * c.generator());
}

size_t coordinate_intersection_dim(const LinearCode& c, const std::vector<bool>& in_I) {
    if (c.k() == 0) return 0;
    std::vector<size_t> outside;
    for (size_t j = 0; j < c.n(); ++j)
        if (!in_I[j]) outside.push_back(j);
    // dim(C ∩ V_I) = k - rank(G outside I).
    return c.k() - rank(c.generator().select_columns(outside));
}

NestedCodePair make_pair(const LinearCode& c1, const LinearCode& c2) {
    if (c1.n() != c2.n() || c1.field().get() != c2.field().get())
        throw std::invalid_argument("NotNested: codes differ in length or field");
    if (!c1.contains_code(c2))
        throw std::invalid_argument("NotNested: a generator of C2 lies outside C1");
    if (c1.k() == c2.k())
        throw std::invalid_argument("NotStrict: k1 = k2");
    return NestedCodePair{c1, c2};
}

NestedCodePair dual_pair(const NestedCodePair& pair) {
    return make_pair(dual(pair.c2), dual(pair.c1));
}

void write_code(std::ostream& os, const LinearCode& c) {
    os << c.field()->q() << ' ' << c.n() << ' ' << c.k() << '\n';
    for (size_t i = 0; i < c.k(); ++i) {
        for (size_t j = 0; j < c.n(); ++j) {
            if (j) os << ' ';
            os << unsigned(c.generator().at(i, j));
        }
        os << '\n';
    }
}

LinearCode read_code(std::istream& is) {
    unsigned q = 0;
    size_t n = 0, k = 0;
    if (!(is >> q >> n >> k)) throw IoError("code file: bad header, expected 'q n k'");
    FieldRef field;
    try {
        field = FieldSpec::get(q);
    } catch (const std::invalid_argument& e) {
        throw IoError(std::string("code file: ") + e.what());
    }
    if (n == 0) throw IoError("code file: n must be positive");
    if (k > n) throw IoError("code file: k > n");
    Matrix g(field, k, n);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) {
            long v = -1;
            if (!(is >> v) || v < 0 || unsigned(v) >= q)
                throw IoError("code file: element out of range or missing");
            g.at(i, j) = uint8_t(v);
        }
    LinearCode c = LinearCode::from_spanning_rows(g);
    if (c.k() != k) throw IoError("code file: generator rows are linearly dependent");
    return c;
}

LinearCode read_code_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open " + path);
    return read_code(is);
}

void write_code_file(const std::string& path, const LinearCode& c) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot write " + path);
    write_code(os, c);
}

}  // namespace rampw
