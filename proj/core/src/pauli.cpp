#include "degbound/pauli.hpp"

#include <stdexcept>

namespace degbound {

namespace {

std::uint64_t mask_for(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_size(std::size_t n) {
    if (n > PauliOperator::kMaxQubits) {
        throw std::invalid_argument(
            "Pauli operators are limited to " + std::to_string(PauliOperator::kMaxQubits) + " qubits (got " +
            std::to_string(n) + ")");
    }
}

}  // namespace

PauliOperator::PauliOperator(std::size_t n) : n_(n) {
    check_size(n);
}

PauliOperator::PauliOperator(std::size_t n, std::uint64_t x_bits, std::uint64_t z_bits)
    : n_(n), x_(x_bits), z_(z_bits) {
    check_size(n);
    if (((x_ | z_) & ~mask_for(n)) != 0) {
        throw std::invalid_argument("Pauli bits set beyond the operator length");
    }
}

PauliOperator PauliOperator::from_string(std::string_view text) {
    PauliOperator p(text.size());
    for (std::size_t q = 0; q < text.size(); q++) {
        p.set(q, text[q]);
    }
    return p;
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &other) {
    if (n_ != other.n_) {
        throw std::invalid_argument("Pauli product of operators with different lengths");
    }
    x_ ^= other.x_;
    z_ ^= other.z_;
    return *this;
}

char PauliOperator::at(std::size_t q) const {
    bool x = (x_ >> q) & 1;
    bool z = (z_ >> q) & 1;
    return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

void PauliOperator::set(std::size_t q, char letter) {
    if (q >= n_) {
        throw std::out_of_range("Pauli qubit index out of range");
    }
    std::uint64_t bit = std::uint64_t{1} << q;
    bool x;
    bool z;
    switch (letter) {
        case 'I':
            x = false, z = false;
            break;
        case 'X':
            x = true, z = false;
            break;
        case 'Y':
            x = true, z = true;
            break;
        case 'Z':
            x = false, z = true;
            break;
        default:
            throw std::invalid_argument(std::string("invalid Pauli letter '") + letter + "'");
    }
    x_ = x ? (x_ | bit) : (x_ & ~bit);
    z_ = z ? (z_ | bit) : (z_ & ~bit);
}

PauliOperator PauliOperator::padded(std::size_t n) const {
    if (n < n_) {
        throw std::invalid_argument("padded: cannot shrink an operator");
    }
    return PauliOperator(n, x_, z_);
}

std::string PauliOperator::str() const {
    std::string s(n_, 'I');
    for (std::size_t q = 0; q < n_; q++) {
        s[q] = at(q);
    }
    return s;
}

}  // namespace degbound
