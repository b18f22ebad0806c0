#pragma once

#include <cstdint>
#include <random>
#include <vector>

// Quadratic residue symbols. The Legendre symbol is available through three
// independent routes (square enumeration, Euler's criterion, Gauss's Lemma)
// so each can serve as an oracle for the others.
namespace qrcft {

// A set A of (p-1)/2 residues such that every nonzero residue mod p lies in
// exactly one of A and -A.
class HalfSystem {
public:
    // Throws invalid_argument if p is not an odd prime, invalid_half_system
    // if the elements do not meet each pair {x, p - x} exactly once.
    static HalfSystem make(std::int64_t p, std::vector<std::int64_t> elements);

    std::int64_t prime() const { return p_; }
    const std::vector<std::int64_t>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    // Position of residue r (in [1, p-1]) within elements(), or -1.
    std::int64_t index_of(std::int64_t r) const { return position_[static_cast<std::size_t>(r)]; }

private:
    HalfSystem(std::int64_t p, std::vector<std::int64_t> elements, std::vector<std::int64_t> position)
        : p_(p), elements_(std::move(elements)), position_(std::move(position))
    {
    }

    std::int64_t p_;
    std::vector<std::int64_t> elements_;
    std::vector<std::int64_t> position_;
};

struct GaussLemmaRow {
    std::size_t j;
    std::int64_t product; // a * a_j mod p, in [1, p-1]
    int sign;
    std::size_t target; // pi(j)
};

struct GaussLemmaTrace {
    std::int64_t a;
    std::vector<GaussLemmaRow> rows;
    int sign_product;
};

struct GaussLemmaResult {
    int value;
    GaussLemmaTrace trace;
};

int legendre_brute(std::int64_t a, std::int64_t p);
int legendre_euler(std::int64_t a, std::int64_t p);
GaussLemmaResult gauss_lemma(std::int64_t a, std::int64_t p, const HalfSystem& half_system);

// Jacobi symbol (a/n) for odd n >= 1, by reciprocity reduction.
int jacobi(std::int64_t a, std::int64_t n);

// Kronecker symbol (d/a), defined for every integer pair.
int kronecker(std::int64_t d, std::int64_t a);

// (-1)^((p-1)/2) p.
std::int64_t pstar(std::int64_t p);

HalfSystem default_half_system(std::int64_t p);

// Uniform choice of one element from each pair {x, p - x}, in shuffled order.
HalfSystem random_half_system(std::int64_t p, std::mt19937_64& rng);

} // namespace qrcft
