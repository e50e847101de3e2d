#pragma once

#include <optional>

#include "pforge/matrix.hpp"

namespace pforge {

// Diagonal quadratic form. When built as an n-fold Pfister form
// <<a_1,...,a_n>> the parameters are recorded; the diagonal then follows
// the fixed tensor order where index bit j selects <1> vs <-a_{j+1}>, so
// the newest parameter is the most significant bit and
// A_{phi_n} = diag(A_{phi_{n-1}}, -a_n A_{phi_{n-1}}) holds literally.
class QForm {
public:
    QForm() : diag_{RatFunc(1)} {}  // the unit form <1>
    explicit QForm(std::vector<RatFunc> diag,
                   std::optional<std::vector<RatFunc>> pfister_params = {});

    // n-fold Pfister form; the empty parameter list gives the 0-fold form <1>
    static QForm pfister(std::vector<RatFunc> params);
    // <<a_1,...,a_{n-1}>> perp <-a_n> (the sign follows the subform's use
    // as a quadric; see README on the sign convention)
    static QForm subform_psi(const std::vector<RatFunc>& params);

    int dim() const { return static_cast<int>(diag_.size()); }
    const std::vector<RatFunc>& diag() const { return diag_; }
    const std::optional<std::vector<RatFunc>>& pfister_params() const {
        return params_;
    }
    Matrix gram() const { return Matrix::diagonal(diag_); }

    bool operator==(const QForm& o) const { return diag_ == o.diag_; }
    bool operator!=(const QForm& o) const { return !(*this == o); }

private:
    std::vector<RatFunc> diag_;
    std::optional<std::vector<RatFunc>> params_;
};

RatFunc qform_eval(const QForm& q, const std::vector<RatFunc>& v);
RatFunc bilinear(const QForm& q, const std::vector<RatFunc>& u,
                 const std::vector<RatFunc>& v);

// orthogonal sum; recognizes the Pfister doubling perp(phi, -c*phi) and
// keeps the parameter list in that case
QForm perp(const QForm& a, const QForm& b);
QForm scale(const RatFunc& c, const QForm& q);

// C * A_src * C^t = A_dst, verified exactly at construction.
struct CongruenceWitness {
    Matrix C;
    QForm source;
    QForm target;
};

// Throws VerifyError naming the first differing entry when the identity
// fails, MathError on dimension mismatch.
CongruenceWitness verify_congruence(const Matrix& C, const QForm& src,
                                    const QForm& dst);

// Basis permutation induced by permuting Pfister slots: for dst params
// q[k] = p[sigma[k]], returns P with P * A_<<p>> * P^t = A_<<q>>.
Matrix pfister_slot_permutation(int nslots, const std::vector<int>& sigma);

// Extend a two-slot witness T (4x4, slots (r,s) of an nslots-fold form,
// T's low bit on slot r) to the full 2^nslots matrix acting as identity on
// the remaining slots.
Matrix extend_two_slot_witness(const Matrix& T, int nslots, int r, int s);

}  // namespace pforge
