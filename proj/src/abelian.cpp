#include "dh/abelian.hpp"

#include "dh/error.hpp"

#include <sstream>

namespace dh {

FpAbelianGroup::FpAbelianGroup() : FpAbelianGroup(0) {}

FpAbelianGroup::FpAbelianGroup(std::size_t generators)
    : generators_(generators), relations_(generators, 0)
{
    set_diagonal_normal_form({}, generators);
}

FpAbelianGroup::FpAbelianGroup(std::size_t generators, IntMatrix relations)
    : generators_(generators), relations_(std::move(relations))
{
    if (relations_.rows() != generators_) {
        if (relations_.rows() == 0 && relations_.cols() == 0)
            relations_ = IntMatrix(generators_, 0);
        else
            fail(ErrorKind::InvalidArgument, "relation matrix rows must match generator count");
    }
    compute_normal_form();
}

void FpAbelianGroup::set_diagonal_normal_form(const IntVector& torsion, std::size_t free_rank)
{
    auto n = std::make_shared<Normal>();
    n->torsion = torsion;
    n->free_rank = free_rank;
    n->to_normal = IntMatrix::identity(generators_);
    n->from_normal = IntMatrix::identity(generators_);
    normal_ = std::move(n);
}

void FpAbelianGroup::compute_normal_form()
{
    if (relations_.is_zero()) {
        set_diagonal_normal_form({}, generators_);
        return;
    }
    SmithForm snf = smith_normal_form(relations_, kLeft | kLeftInverse);
    auto n = std::make_shared<Normal>();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < generators_; ++i) {
        if (i < snf.rank) {
            if (snf.factors[i] == 1)
                continue;
            n->torsion.push_back(snf.factors[i]);
        } else {
            ++n->free_rank;
        }
        keep.push_back(i);
    }
    n->to_normal = snf.left.select_rows(keep);
    n->from_normal = snf.left_inverse.select_cols(keep);
    normal_ = std::move(n);
}

FpAbelianGroup FpAbelianGroup::cyclic(const Integer& order)
{
    if (sgn(order) < 0)
        fail(ErrorKind::InvalidArgument, "cyclic group order must be nonnegative");
    if (order == 0)
        return FpAbelianGroup(1);
    IntMatrix r(1, 1);
    r(0, 0) = order;
    return FpAbelianGroup(1, std::move(r));
}

FpAbelianGroup FpAbelianGroup::from_invariants(const IntVector& torsion, std::size_t free_rank)
{
    IntVector t;
    for (const auto& d : torsion) {
        if (sgn(d) < 0)
            fail(ErrorKind::InvalidArgument, "invariant factors must be nonnegative");
        if (d == 0)
            ++free_rank;
        else if (d != 1)
            t.push_back(d);
    }
    const std::size_t g = t.size() + free_rank;
    IntMatrix r(g, t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        r(i, i) = t[i];
    return FpAbelianGroup(g, std::move(r));
}

FpAbelianGroup FpAbelianGroup::direct_sum(const std::vector<FpAbelianGroup>& parts)
{
    std::size_t g = 0;
    std::vector<IntMatrix> blocks;
    for (const auto& p : parts) {
        g += p.generators_;
        blocks.push_back(p.relations_);
    }
    return FpAbelianGroup(g, IntMatrix::block_diagonal(blocks));
}

Integer FpAbelianGroup::order() const
{
    if (!is_finite())
        return 0;
    Integer n = 1;
    for (const auto& d : torsion())
        n *= d;
    return n;
}

std::string FpAbelianGroup::to_string() const
{
    if (is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank() > 0) {
        os << "Z^" << free_rank();
        first = false;
    }
    for (const auto& d : torsion()) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return os.str();
}

bool FpAbelianGroup::isomorphic_to(const FpAbelianGroup& other) const
{
    return free_rank() == other.free_rank() && torsion() == other.torsion();
}

IntVector FpAbelianGroup::normal_coordinates(const IntVector& x) const
{
    if (x.size() != generators_)
        fail(ErrorKind::InvalidArgument, "element has wrong number of coordinates");
    IntVector y = to_normal().apply(x);
    const auto& t = torsion();
    for (std::size_t i = 0; i < t.size(); ++i)
        mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), t[i].get_mpz_t());
    return y;
}

bool FpAbelianGroup::is_zero(const IntVector& x) const
{
    for (const auto& c : normal_coordinates(x))
        if (sgn(c) != 0)
            return false;
    return true;
}

bool FpAbelianGroup::equal(const IntVector& x, const IntVector& y) const
{
    if (x.size() != y.size())
        return false;
    IntVector d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        d[i] = x[i] - y[i];
    return is_zero(d);
}

FpAbelianGroup FpAbelianGroup::normalized() const
{
    FpAbelianGroup out;
    const auto& t = torsion();
    out.generators_ = t.size() + free_rank();
    out.relations_ = IntMatrix(out.generators_, t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        out.relations_(i, i) = t[i];
    out.set_diagonal_normal_form(t, free_rank());
    return out;
}

std::vector<IntVector> FpAbelianGroup::elements() const
{
    if (!is_finite())
        fail(ErrorKind::InvalidArgument, "cannot enumerate an infinite group");
    const Integer total = order();
    if (total > 1000000)
        fail(ErrorKind::BoundExceeded, "group too large to enumerate: " + to_string());
    const auto& t = torsion();
    const std::size_t count = total.get_ui();
    std::vector<IntVector> out;
    out.reserve(count);
    IntVector digits(t.size(), Integer(0));
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = t.size(); i-- > 0;) {
            const std::size_t base = t[i].get_ui();
            digits[i] = static_cast<unsigned long>(rest % base);
            rest /= base;
        }
        out.push_back(from_normal().apply(digits));
    }
    return out;
}

std::size_t FpAbelianGroup::element_index(const IntVector& x) const
{
    if (!is_finite())
        fail(ErrorKind::InvalidArgument, "element index requires a finite group");
    IntVector y = normal_coordinates(x);
    const auto& t = torsion();
    std::size_t idx = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        idx = idx * t[i].get_ui() + y[i].get_ui();
    return idx;
}

AbHom::AbHom(Trusted, FpAbelianGroup source, FpAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
}

AbHom AbHom::trusted(FpAbelianGroup source, FpAbelianGroup target, IntMatrix matrix)
{
    if (matrix.rows() != target.generator_count() || matrix.cols() != source.generator_count())
        fail(ErrorKind::InvalidArgument, "homomorphism matrix has wrong shape");
    return AbHom(Trusted{}, std::move(source), std::move(target), std::move(matrix));
}

AbHom::AbHom(FpAbelianGroup source, FpAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    if (matrix_.rows() != target_.generator_count() || matrix_.cols() != source_.generator_count())
        fail(ErrorKind::InvalidArgument, "homomorphism matrix has wrong shape");
    const IntMatrix& rel = source_.relations();
    if (rel.cols() == 0)
        return;
    IntMatrix images = matrix_ * rel;
    for (std::size_t c = 0; c < images.cols(); ++c)
        if (!target_.is_zero(images.column(c)))
            fail(ErrorKind::Validation,
                 "matrix does not respect relation " + std::to_string(c) + " of the source");
}

AbHom AbHom::identity(const FpAbelianGroup& group)
{
    return AbHom(Trusted{}, group, group, IntMatrix::identity(group.generator_count()));
}

AbHom AbHom::zero(const FpAbelianGroup& source, const FpAbelianGroup& target)
{
    return AbHom(Trusted{}, source, target,
                 IntMatrix(target.generator_count(), source.generator_count()));
}

AbHom AbHom::stack(const std::vector<AbHom>& maps)
{
    if (maps.empty())
        fail(ErrorKind::InvalidArgument, "stack of no maps");
    std::vector<FpAbelianGroup> targets;
    IntMatrix m(0, maps.front().source().generator_count());
    for (const auto& f : maps) {
        if (f.source().generator_count() != m.cols())
            fail(ErrorKind::InvalidArgument, "stacked maps need a common source");
        targets.push_back(f.target());
        m = IntMatrix::vconcat(m, f.matrix());
    }
    return AbHom(Trusted{}, maps.front().source(), FpAbelianGroup::direct_sum(targets), std::move(m));
}

AbHom AbHom::direct_sum(const std::vector<AbHom>& maps)
{
    std::vector<FpAbelianGroup> sources, targets;
    std::vector<IntMatrix> blocks;
    for (const auto& f : maps) {
        sources.push_back(f.source());
        targets.push_back(f.target());
        blocks.push_back(f.matrix());
    }
    return AbHom(Trusted{}, FpAbelianGroup::direct_sum(sources), FpAbelianGroup::direct_sum(targets),
                 IntMatrix::block_diagonal(blocks));
}

AbHom AbHom::then(const AbHom& next) const
{
    if (next.source_.generator_count() != target_.generator_count())
        fail(ErrorKind::InvalidArgument, "composition of incompatible maps");
    return AbHom(Trusted{}, source_, next.target_, next.matrix_ * matrix_);
}

AbHom AbHom::operator+(const AbHom& other) const
{
    return AbHom(Trusted{}, source_, target_, matrix_ + other.matrix_);
}

AbHom AbHom::operator-(const AbHom& other) const
{
    return AbHom(Trusted{}, source_, target_, matrix_ - other.matrix_);
}

AbHom AbHom::scaled(const Integer& k) const
{
    return AbHom(Trusted{}, source_, target_, matrix_.scaled(k));
}

bool AbHom::equals(const AbHom& other) const
{
    if (matrix_.rows() != other.matrix_.rows() || matrix_.cols() != other.matrix_.cols())
        return false;
    IntMatrix d = matrix_ - other.matrix_;
    for (std::size_t c = 0; c < d.cols(); ++c)
        if (!target_.is_zero(d.column(c)))
            return false;
    return true;
}

bool AbHom::is_zero() const
{
    for (std::size_t c = 0; c < matrix_.cols(); ++c)
        if (!target_.is_zero(matrix_.column(c)))
            return false;
    return true;
}

namespace {

// Columns spanning {x : M x in im R'} in source coordinates.
IntMatrix preimage_of_relations(const IntMatrix& m, const IntMatrix& target_relations)
{
    const IntMatrix kb = kernel_basis(IntMatrix::hconcat(m, target_relations));
    return kb.submatrix(0, m.cols(), 0, kb.cols());
}

}  // namespace

AbHom AbHom::kernel() const
{
    const IntMatrix l = preimage_of_relations(matrix_, target_.relations());
    const IntMatrix kb = kernel_basis(IntMatrix::hconcat(l, source_.relations()));
    FpAbelianGroup k(l.cols(), kb.submatrix(0, l.cols(), 0, kb.cols()));
    return AbHom(Trusted{}, k.normalized(), source_, l * k.from_normal());
}

AbHom AbHom::cokernel() const
{
    FpAbelianGroup q(target_.generator_count(), IntMatrix::hconcat(target_.relations(), matrix_));
    return AbHom(Trusted{}, target_, q.normalized(), q.to_normal());
}

AbHom::Image AbHom::image() const
{
    FpAbelianGroup im(source_.generator_count(), preimage_of_relations(matrix_, target_.relations()));
    FpAbelianGroup n = im.normalized();
    return Image{AbHom(Trusted{}, source_, n, im.to_normal()),
                 AbHom(Trusted{}, n, target_, matrix_ * im.from_normal())};
}

std::optional<IntMatrix> AbHom::lift(const IntMatrix& targets) const
{
    auto x = solve(IntMatrix::hconcat(matrix_, target_.relations()), targets);
    if (!x)
        return std::nullopt;
    return x->submatrix(0, matrix_.cols(), 0, x->cols());
}

bool AbHom::in_image(const IntVector& y) const
{
    return lift(IntMatrix::column_vector(y)).has_value();
}

ChainComplex::ChainComplex(std::vector<FpAbelianGroup> groups, std::vector<AbHom> differentials)
    : groups_(std::move(groups)), differentials_(std::move(differentials))
{
    if (groups_.empty())
        groups_.emplace_back();
    if (differentials_.size() + 1 != groups_.size())
        fail(ErrorKind::InvalidArgument, "chain complex needs one differential per positive degree");
    for (std::size_t n = 1; n < groups_.size(); ++n) {
        const AbHom& d = differentials_[n - 1];
        if (d.source().generator_count() != groups_[n].generator_count() ||
            d.target().generator_count() != groups_[n - 1].generator_count())
            fail(ErrorKind::InvalidArgument, "differential d_" + std::to_string(n) + " has wrong endpoints");
    }
    for (std::size_t n = 2; n < groups_.size(); ++n)
        if (!differentials_[n - 1].then(differentials_[n - 2]).is_zero())
            fail(ErrorKind::Validation, "d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0");
}

IntMatrix ChainComplex::Homology::classify(const IntMatrix& cycles_in_chains) const
{
    auto z = cycles.lift(cycles_in_chains);
    if (!z)
        fail(ErrorKind::Validation, "chain is not a cycle");
    return class_of_cycle * *z;
}

ChainComplex::Homology ChainComplex::homology_data(std::size_t n) const
{
    const FpAbelianGroup& c = group(n);
    AbHom z = n == 0 ? AbHom::identity(c) : differential(n).kernel();
    IntMatrix rel = z.source().relations();
    if (n < top_degree()) {
        auto y = z.lift(differential(n + 1).matrix());
        if (!y)
            fail(ErrorKind::Validation, "boundaries are not cycles");
        rel = IntMatrix::hconcat(rel, *y);
    }
    FpAbelianGroup raw(z.source().generator_count(), std::move(rel));
    IntMatrix reps = z.matrix() * raw.from_normal();
    return Homology{raw.normalized(), std::move(z), raw.to_normal(), std::move(reps)};
}

AbHom induced_on_homology(const ChainComplex::Homology& from,
                          const ChainComplex::Homology& to,
                          const AbHom& chain_map)
{
    IntMatrix coords = to.classify(chain_map.matrix() * from.representatives);
    return AbHom(from.group, to.group, std::move(coords));
}

namespace {

bool composes_to_zero(const SparseMatrix& outer, const SparseMatrix& inner)
{
    std::vector<long> acc(outer.rows(), 0);
    for (std::size_t c = 0; c < inner.cols(); ++c) {
        std::vector<std::uint32_t> touched;
        for (const auto& [k, v] : inner.column(c))
            for (const auto& [r, w] : outer.column(k)) {
                if (acc[r] == 0)
                    touched.push_back(r);
                acc[r] += v * w;
            }
        bool zero = true;
        for (auto r : touched) {
            if (acc[r] != 0)
                zero = false;
            acc[r] = 0;
        }
        if (!zero)
            return false;
    }
    return true;
}

}  // namespace

FreeChainComplex::FreeChainComplex(std::vector<std::size_t> ranks, std::vector<SparseMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries))
{
    if (ranks_.empty())
        ranks_.push_back(0);
    if (boundaries_.size() + 1 != ranks_.size())
        fail(ErrorKind::InvalidArgument, "free chain complex needs one boundary per positive degree");
    for (std::size_t n = 1; n < ranks_.size(); ++n) {
        const SparseMatrix& d = boundaries_[n - 1];
        if (d.cols() != ranks_[n] || d.rows() != ranks_[n - 1])
            fail(ErrorKind::InvalidArgument, "boundary d_" + std::to_string(n) + " has wrong shape");
    }
    for (std::size_t n = 2; n < ranks_.size(); ++n)
        if (!composes_to_zero(boundaries_[n - 2], boundaries_[n - 1]))
            fail(ErrorKind::Validation, "d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0");
    for (const auto& d : boundaries_)
        factors_.push_back(invariant_factors(d));
}

FpAbelianGroup FreeChainComplex::homology(std::size_t n) const
{
    if (n > top_degree())
        return FpAbelianGroup();
    const std::size_t out_rank = n >= 1 ? factors_[n - 1].size() : 0;
    IntVector torsion;
    std::size_t in_rank = 0;
    if (n < top_degree()) {
        const IntVector& f = factors_[n];
        in_rank = f.size();
        for (const auto& d : f)
            if (d != 1)
                torsion.push_back(d);
    }
    return FpAbelianGroup::from_invariants(torsion, ranks_[n] - out_rank - in_rank);
}

ChainComplex FreeChainComplex::to_general() const
{
    std::vector<FpAbelianGroup> groups;
    for (auto r : ranks_)
        groups.emplace_back(r);
    std::vector<AbHom> ds;
    for (std::size_t n = 1; n < ranks_.size(); ++n)
        ds.push_back(AbHom(groups[n], groups[n - 1], boundaries_[n - 1].to_dense()));
    return ChainComplex(std::move(groups), std::move(ds));
}

}  // namespace dh
