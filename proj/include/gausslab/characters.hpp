#pragma once

#include <memory>
#include <vector>

#include "gausslab/arith.hpp"
#include "gausslab/complex.hpp"
#include "gausslab/fft.hpp"

namespace gausslab {

class CharacterSystem;

// One Dirichlet character mod p, identified by its index j:
// chi_j(g^k) = e(jk/(p-1)). j = 0 is the principal character; parity of j is
// the parity of the character.
class Character {
  public:
    Character(const CharacterSystem& sys, std::uint32_t j);

    std::uint32_t index() const { return j_; }
    bool is_even() const { return (j_ & 1) == 0; }
    bool is_principal() const { return j_ == 0; }

    Complex operator()(long long a) const;

  private:
    const CharacterSystem* sys_;
    std::uint32_t j_;
};

// Character evaluation and the all-characters transform for one prime.
// Holds the length-(p-1) root-of-unity table at the working precision in
// force at construction time; immutable afterwards.
class CharacterSystem {
  public:
    explicit CharacterSystem(const PrimeContext& ctx)
        : ctx_(&ctx), zeta_(unit_root_table(ctx.order())) {}

    const PrimeContext& ctx() const { return *ctx_; }
    std::uint32_t order() const { return ctx_->order(); }

    Character character(long long j) const {
        if (j < 0 || j >= static_cast<long long>(order())) throw IndexOutOfRange(j, order());
        return Character(*this, static_cast<std::uint32_t>(j));
    }

    // chi_j(a); zero on multiples of p
    Complex chi(std::uint32_t j, long long a) const {
        std::uint32_t r = ctx_->reduce(a);
        if (r == 0) return Complex();
        std::uint64_t e = static_cast<std::uint64_t>(j) * ctx_->dlog(r) % order();
        return zeta_[e];
    }

    // F[j] = sum_{a=1}^{p-1} chi_j(a) w(a), for all j at once. The weights are
    // indexed by residue: w[a-1] holds w(a). Re-indexing W[k] = w(g^k) turns
    // the sum into a length-(p-1) DFT, handled by the Bluestein kernel.
    std::vector<Complex> transform(const std::vector<Complex>& w) const {
        require_precision(ctx_->p(), 1);
        std::vector<Complex> W = reindex(w);
        ensure_plan();
        return plan_->apply(W);
    }

    // O(p^2) direct summation; the oracle for transform().
    std::vector<Complex> transform_direct(const std::vector<Complex>& w) const {
        std::vector<Complex> W = reindex(w);
        return dft_direct(W);
    }

  private:
    std::vector<Complex> reindex(const std::vector<Complex>& w) const {
        const std::uint32_t n = order();
        if (w.size() != n) throw LengthMismatch(w.size(), n);
        std::vector<Complex> W(n);
        for (std::uint32_t k = 0; k < n; ++k) W[k] = w[ctx_->pow_g(k) - 1];
        return W;
    }

    void ensure_plan() const {
        if (!plan_) plan_ = std::make_unique<BluesteinPlan>(order());
    }

    const PrimeContext* ctx_;
    std::vector<Complex> zeta_;
    mutable std::unique_ptr<BluesteinPlan> plan_;
};

inline Character::Character(const CharacterSystem& sys, std::uint32_t j) : sys_(&sys), j_(j) {}

inline Complex Character::operator()(long long a) const { return sys_->chi(j_, a); }

}  // namespace gausslab
