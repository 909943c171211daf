#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace degbound {

/// Pauli operator on up to 64 qubits in symplectic form, phase ignored.
/// Qubit q is bit q of the masks: X = (1|0), Z = (0|1), Y = (1|1).
class PauliOperator {
   public:
    static constexpr std::size_t kMaxQubits = 64;

    PauliOperator() = default;
    /// Identity on n qubits.
    explicit PauliOperator(std::size_t n);
    PauliOperator(std::size_t n, std::uint64_t x_bits, std::uint64_t z_bits);

    /// Parses a string over {I,X,Y,Z}. Throws std::invalid_argument on other characters
    /// or when the length exceeds kMaxQubits.
    static PauliOperator from_string(std::string_view text);

    std::size_t size() const {
        return n_;
    }
    std::uint64_t x_bits() const {
        return x_;
    }
    std::uint64_t z_bits() const {
        return z_;
    }
    std::uint64_t support() const {
        return x_ | z_;
    }
    int weight() const {
        return std::popcount(x_ | z_);
    }
    bool is_identity() const {
        return (x_ | z_) == 0;
    }

    /// x1.z2 + z1.x2 mod 2.
    int symplectic_product(const PauliOperator &other) const {
        return std::popcount((x_ & other.z_) ^ (z_ & other.x_)) & 1;
    }
    bool commutes_with(const PauliOperator &other) const {
        return symplectic_product(other) == 0;
    }

    /// Product up to phase.
    PauliOperator &operator*=(const PauliOperator &other);
    friend PauliOperator operator*(PauliOperator a, const PauliOperator &b) {
        a *= b;
        return a;
    }

    char at(std::size_t q) const;
    void set(std::size_t q, char letter);

    /// Same operator acting as identity on extra trailing qubits.
    PauliOperator padded(std::size_t n) const;

    std::string str() const;

    bool operator==(const PauliOperator &) const = default;
    /// Total order used to make enumeration results deterministic.
    auto operator<=>(const PauliOperator &) const = default;

   private:
    std::size_t n_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
};

}  // namespace degbound
