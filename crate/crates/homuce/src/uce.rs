//! Universal central extension constructions.
//!
//! All four quotients share one core: pick the pair space (full tensor
//! square, full exterior square, or their restrictions to the twist image),
//! quotient by the span of the relation elements built from all basis
//! triples, and carry the induced bracket, twist and canonical projection
//! `u` sending a class `{x, y}` to `[x, y]`. Well-definedness of the induced
//! structure is verified per instance, never assumed: the bracket evaluation
//! must kill every relation generator, and the pair twist must preserve the
//! relation span.

use thiserror::Error;

use crate::algebra::{Flavor, HomAlgebra, ValidationReport};
use crate::extension::{Centrality, Extension};
use crate::homology::{self, HomologyError};
use crate::indexing::WedgeIndex;
use crate::matrix::{unit_vec, vec_is_zero, Matrix};
use crate::morphism::{Hom, MorphismError};
use crate::scalar::Scalar;
use crate::subspace::{QuotientSpace, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UceSpace {
    Tensor,
    Wedge,
}

#[derive(Debug, Error)]
pub enum UceError {
    #[error("induced bracket is not well-defined: relation of triple {0:?} has nonzero bracket evaluation")]
    BracketNotWellDefined((usize, usize, usize)),
    #[error("induced twist is not well-defined: relation of triple {0:?} leaves the relation span")]
    TwistNotWellDefined((usize, usize, usize)),
    #[error("bracket of classes escapes the restricted pair space; input is not alpha-perfect")]
    NotClosed,
    #[error("exterior-square construction needs the lie flavor")]
    NotHomLie,
    #[error("constructed map failed validation: {0}")]
    BadHom(#[from] MorphismError),
}

#[derive(Debug, Error)]
pub enum LiftError {
    #[error("target extension is not over the same base algebra")]
    NotOverSameBase,
    #[error("target lacks the centrality needed for a well-defined lift (found {0:?})")]
    LiftIllDefined(Centrality),
    #[error("preimage matrix is not a section of the target projection")]
    BadPreimages,
    #[error("assembled lift is not a homomorphism: {0}")]
    NotAHomomorphism(#[from] MorphismError),
    #[error("lift does not cover the canonical projection")]
    DoesNotCover,
}

/// One of the four quotient constructions, with its verification data.
#[derive(Clone, Debug)]
pub struct UceResult {
    pub algebra: HomAlgebra,
    /// Canonical projection onto the base (image is the derived subalgebra).
    pub u: Hom,
    /// Kernel of `u` in quotient coordinates.
    pub kernel: Subspace,
    /// Human-readable description of each class basis vector.
    pub generators: Vec<String>,
    pub space: UceSpace,
    pub alpha_restricted: bool,
    /// The perfectness hypothesis relevant to this construction holds.
    pub perfect: bool,
    /// Universality claims enabled (the relevant perfectness holds and all
    /// relation generators lie in the pair space).
    pub universal: bool,
    /// Centrality classification of `u` when surjective.
    pub centrality: Option<Centrality>,
    pub validation: ValidationReport,
    /// The pair space W in ambient coordinates.
    pub domain: Subspace,
    /// The relation span inside W, ambient coordinates.
    pub relations: Subspace,
    /// Ambient representative of each quotient basis class.
    pub reps: Vec<Vec<Scalar>>,
    base: HomAlgebra,
}

impl UceResult {
    pub fn base(&self) -> &HomAlgebra {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn kernel_dim(&self) -> usize {
        self.kernel.dim()
    }
}

struct PairSpace<'a> {
    alg: &'a HomAlgebra,
    space: UceSpace,
    wedge: WedgeIndex,
}

impl<'a> PairSpace<'a> {
    fn new(alg: &'a HomAlgebra, space: UceSpace) -> Self {
        PairSpace {
            alg,
            space,
            wedge: WedgeIndex::new(2, alg.dim()),
        }
    }

    fn ambient(&self) -> usize {
        match self.space {
            UceSpace::Tensor => self.alg.dim() * self.alg.dim(),
            UceSpace::Wedge => self.wedge.len(),
        }
    }

    /// `x (x) y` resp. `x ^ y` in ambient coordinates.
    fn pair(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.ambient()];
        match self.space {
            UceSpace::Tensor => {
                let dim = self.alg.dim();
                for (a, xa) in x.iter().enumerate() {
                    if xa.is_zero() {
                        continue;
                    }
                    for (b, yb) in y.iter().enumerate() {
                        if yb.is_zero() {
                            continue;
                        }
                        out[a * dim + b] = xa * yb;
                    }
                }
            }
            UceSpace::Wedge => self.wedge.accumulate_wedge(&[x, y], &Scalar::one(), &mut out),
        }
        out
    }

    /// Bracket evaluation: the linear map sending a pair element to the
    /// bracket of its factors.
    fn bracket_eval(&self, v: &[Scalar]) -> Vec<Scalar> {
        let dim = self.alg.dim();
        let mut out = vec![Scalar::zero(); dim];
        for (flat, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b) = match self.space {
                UceSpace::Tensor => (flat / dim, flat % dim),
                UceSpace::Wedge => {
                    let t = self.wedge.unflatten(flat);
                    (t[0], t[1])
                }
            };
            for (k, s) in self.alg.bracket_basis(a, b).iter().enumerate() {
                if s.is_zero() {
                    continue;
                }
                let t = c * s;
                out[k] += &t;
            }
        }
        out
    }

    /// The pair twist `alpha (x) alpha` on ambient coordinates.
    fn twist_matrix(&self) -> Matrix {
        match self.space {
            UceSpace::Tensor => self.alg.alpha().kron(self.alg.alpha()),
            UceSpace::Wedge => {
                let mut out = Matrix::zero(self.wedge.len(), self.wedge.len());
                for flat in 0..self.wedge.len() {
                    let t = self.wedge.unflatten(flat);
                    let col = self.pair(&self.alg.alpha_column(t[0]), &self.alg.alpha_column(t[1]));
                    out.set_column(flat, &col);
                }
                out
            }
        }
    }

    /// Relation element of one basis triple.
    fn relation(&self, x1: usize, x2: usize, x3: usize) -> Vec<Scalar> {
        let alg = self.alg;
        let b12 = alg.bracket_basis(x1, x2);
        let b13 = alg.bracket_basis(x1, x3);
        let b23 = alg.bracket_basis(x2, x3);
        let a1 = alg.alpha_column(x1);
        let a2 = alg.alpha_column(x2);
        let a3 = alg.alpha_column(x3);
        let mut out = vec![Scalar::zero(); self.ambient()];
        let mut add = |v: Vec<Scalar>, negate: bool| {
            for (o, x) in out.iter_mut().zip(v) {
                if negate {
                    *o -= &x;
                } else {
                    *o += &x;
                }
            }
        };
        add(self.pair(b12, &a3), true);
        add(self.pair(b13, &a2), false);
        match self.space {
            // third term: + alpha(x1) (x) [x2,x3]  resp.  - [x2,x3] ^ alpha(x1)
            UceSpace::Tensor => add(self.pair(&a1, b23), false),
            UceSpace::Wedge => add(self.pair(b23, &a1), true),
        }
        out
    }

    fn describe(&self, v: &[Scalar]) -> String {
        let dim = self.alg.dim();
        let mut parts = Vec::new();
        for (flat, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b) = match self.space {
                UceSpace::Tensor => (flat / dim, flat % dim),
                UceSpace::Wedge => {
                    let t = self.wedge.unflatten(flat);
                    (t[0], t[1])
                }
            };
            let class = format!("{{{},{}}}", self.alg.label(a), self.alg.label(b));
            if c.is_one() {
                parts.push(class);
            } else {
                parts.push(format!("({})*{}", c.to_text(), class));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Shared core of the four constructions.
fn uce_core(base: &HomAlgebra, space: UceSpace, alpha_restricted: bool) -> Result<UceResult, UceError> {
    if space == UceSpace::Wedge && base.flavor() != Flavor::Lie {
        return Err(UceError::NotHomLie);
    }
    let dim = base.dim();
    let pairs = PairSpace::new(base, space);
    let ambient = pairs.ambient();

    let domain = if alpha_restricted {
        let mut rows = Vec::new();
        for a in 0..dim {
            for b in 0..dim {
                rows.push(pairs.pair(&base.alpha_column(a), &base.alpha_column(b)));
            }
        }
        Subspace::from_rows(ambient, rows)
    } else {
        Subspace::full(ambient)
    };

    // relation generators over all basis triples
    let mut triples = Vec::new();
    let mut gen_rows = Vec::new();
    for x1 in 0..dim {
        for x2 in 0..dim {
            for x3 in 0..dim {
                let g = pairs.relation(x1, x2, x3);
                if !vec_is_zero(&g) {
                    triples.push((x1, x2, x3));
                    gen_rows.push(g);
                }
            }
        }
    }

    // the bracket evaluation must kill every generator; this is exactly the
    // twisted Leibniz identity (tensor) or its alternating form (wedge)
    for (t, g) in triples.iter().zip(&gen_rows) {
        if !vec_is_zero(&pairs.bracket_eval(g)) {
            return Err(UceError::BracketNotWellDefined(*t));
        }
    }

    let relations_all = Subspace::from_rows(ambient, gen_rows.clone());
    let relations_contained = domain.contains_subspace(&relations_all);
    let relations = if relations_contained {
        relations_all
    } else {
        relations_all.intersect(&domain)
    };

    // the pair twist must preserve the relation span
    let twist = pairs.twist_matrix();
    for (t, g) in triples.iter().zip(&gen_rows) {
        if relations_contained && !relations.contains(&twist.apply(g)) {
            return Err(UceError::TwistNotWellDefined(*t));
        }
    }

    // quotient of W-coordinates by the relations
    let wdim = domain.dim();
    let rel_in_w: Vec<Vec<Scalar>> = relations
        .basis_rows()
        .into_iter()
        .map(|r| domain.coordinates(&r).expect("relations lie in the domain"))
        .collect();
    let rel_w = Subspace::from_rows(wdim, rel_in_w);
    let quotient = QuotientSpace::new(wdim, &rel_w);
    let qdim = quotient.dim();
    let w_basis = domain.basis();

    let rep_of = |class: usize| -> Vec<Scalar> {
        let wcoords = quotient.section().column(class);
        w_basis.transpose().apply(&wcoords)
    };
    let reps: Vec<Vec<Scalar>> = (0..qdim).map(rep_of).collect();

    let to_class = |ambient_vec: &[Scalar]| -> Option<Vec<Scalar>> {
        let wcoords = domain.coordinates(ambient_vec)?;
        Some(quotient.project_vec(&wcoords))
    };

    // induced bracket, twist and canonical projection via representatives
    let labels = (1..=qdim).map(|i| format!("u{i}")).collect();
    let mut alpha = Matrix::zero(qdim, qdim);
    for (s, r) in reps.iter().enumerate() {
        let col = to_class(&twist.apply(r)).ok_or(UceError::NotClosed)?;
        alpha.set_column(s, &col);
    }
    let mut algebra = HomAlgebra::zero_bracket(
        labels,
        alpha,
        if space == UceSpace::Wedge {
            Flavor::Lie
        } else {
            Flavor::Leibniz
        },
    );
    let images: Vec<Vec<Scalar>> = reps.iter().map(|r| pairs.bracket_eval(r)).collect();
    for s in 0..qdim {
        for t in 0..qdim {
            let value = pairs.pair(&images[s], &images[t]);
            let coords = to_class(&value).ok_or(UceError::NotClosed)?;
            algebra.set_bracket(s, t, coords);
        }
    }
    let mut u_matrix = Matrix::zero(dim, qdim);
    for (s, img) in images.iter().enumerate() {
        u_matrix.set_column(s, img);
    }

    let validation = algebra.validate();
    let u = Hom::new(&algebra, base, u_matrix)?;
    let kernel = u.kernel();
    let (is_perfect, is_alpha_perfect) = base.perfectness();
    let perfect = if alpha_restricted { is_alpha_perfect } else { is_perfect };
    let universal = perfect && relations_contained;
    let centrality = if u.is_surjective() {
        Extension::new(u.clone()).ok().map(|e| e.classification())
    } else {
        None
    };
    let generators = reps.iter().map(|r| pairs.describe(r)).collect();

    Ok(UceResult {
        algebra,
        u,
        kernel,
        generators,
        space,
        alpha_restricted,
        perfect,
        universal,
        centrality,
        validation,
        domain,
        relations,
        reps,
        base: base.clone(),
    })
}

/// `uce(L) = (L (x) L) / I_L`, the universal central extension of a perfect
/// Hom-Leibniz algebra. For a non-perfect input the quotient is still built;
/// `u` then maps onto the derived subalgebra and universality is disabled.
pub fn uce_leibniz(base: &HomAlgebra) -> Result<UceResult, UceError> {
    uce_core(base, UceSpace::Tensor, false)
}

/// The exterior-square variant for a perfect Hom-Lie algebra; its kernel
/// realizes the second exterior homology.
pub fn uce_lie(base: &HomAlgebra) -> Result<UceResult, UceError> {
    uce_core(base, UceSpace::Wedge, false)
}

/// The alpha-restricted constructions over the pair space of the twist
/// image; the universal alpha-central extensions of an alpha-perfect input.
pub fn uce_alpha(base: &HomAlgebra, space: UceSpace) -> Result<UceResult, UceError> {
    uce_core(base, space, true)
}

/// Canonical preimage matrix for a surjection: column j solves
/// `pi(k) = e_j` with free coordinates zero.
pub fn canonical_preimages(pi: &Hom) -> Matrix {
    let dst = pi.dst().dim();
    let mut out = Matrix::zero(pi.src().dim(), dst);
    for j in 0..dst {
        let sol = pi
            .matrix()
            .solve(&unit_vec(dst, j))
            .expect("surjection has preimages");
        out.set_column(j, &sol);
    }
    out
}

/// The lift of a universal (alpha-)central extension over a target extension
/// of the same base: sends `{x, y}` to `[k_x, k_y]` (alpha-restricted
/// variants apply the target twist to the preimages first). Preimages are
/// the canonical particular solutions.
pub fn lift_over(uce: &UceResult, target: &Extension) -> Result<Hom, LiftError> {
    let preimages = canonical_preimages(target.pi());
    lift_over_with_preimages(uce, target, &preimages)
}

/// Same as [`lift_over`] with an explicit choice of preimages; used to
/// verify that the lift does not depend on the choice.
pub fn lift_over_with_preimages(
    uce: &UceResult,
    target: &Extension,
    preimages: &Matrix,
) -> Result<Hom, LiftError> {
    let base = uce.base();
    if target.dst() != base {
        return Err(LiftError::NotOverSameBase);
    }
    let needed_central = !uce.alpha_restricted;
    match target.classification() {
        Centrality::Central => {}
        Centrality::AlphaCentralOnly if !needed_central => {}
        other => return Err(LiftError::LiftIllDefined(other)),
    }
    if !target.pi().matrix().mul(preimages).is_identity() {
        return Err(LiftError::BadPreimages);
    }

    let dim = base.dim();
    let src_alg = target.src();
    let pairs = PairSpace::new(base, uce.space);
    // decomposition basis: columns are pair(alpha e_a, alpha e_b) for the
    // alpha-restricted variants, pair(e_a, e_b) otherwise
    let mut decomp = Matrix::zero(pairs.ambient(), dim * dim);
    for a in 0..dim {
        for b in 0..dim {
            let (xa, xb) = if uce.alpha_restricted {
                (base.alpha_column(a), base.alpha_column(b))
            } else {
                (unit_vec(dim, a), unit_vec(dim, b))
            };
            decomp.set_column(a * dim + b, &pairs.pair(&xa, &xb));
        }
    }
    // bracket images of the chosen preimages
    let kappa: Vec<Vec<Scalar>> = (0..dim)
        .map(|a| {
            let k = preimages.column(a);
            if uce.alpha_restricted {
                src_alg.apply_alpha(&k)
            } else {
                k
            }
        })
        .collect();

    let mut lift = Matrix::zero(src_alg.dim(), uce.dim());
    for (s, rep) in uce.reps.iter().enumerate() {
        let coeffs = decomp.solve(rep).ok_or(LiftError::DoesNotCover)?;
        let mut img = vec![Scalar::zero(); src_alg.dim()];
        for a in 0..dim {
            for b in 0..dim {
                let c = &coeffs[a * dim + b];
                if c.is_zero() {
                    continue;
                }
                let br = src_alg.bracket(&kappa[a], &kappa[b]);
                for (o, v) in img.iter_mut().zip(br) {
                    let t = c * &v;
                    *o += &t;
                }
            }
        }
        lift.set_column(s, &img);
    }

    let hom = Hom::new(&uce.algebra, src_alg, lift)?;
    if target.pi().matrix().mul(hom.matrix()) != *uce.u.matrix() {
        return Err(LiftError::DoesNotCover);
    }
    Ok(hom)
}

/// Comparison of the two alpha-restricted constructions over an
/// alpha-perfect Hom-Lie algebra.
#[derive(Clone, Debug)]
pub struct AlphaComparison {
    pub leib: UceResult,
    pub lie: UceResult,
    /// The induced surjection from the tensor-square onto the
    /// exterior-square construction.
    pub phi: Hom,
    pub covers: bool,
    pub phi_surjective: bool,
    pub phi_kernel_central: bool,
    /// The canonical map from the liezation of the tensor-square variant
    /// onto the exterior-square variant is bijective.
    pub liezation_iso: bool,
}

#[derive(Debug, Error)]
pub enum CompareError {
    #[error("comparison requires the lie flavor")]
    NotHomLie,
    #[error("comparison requires an alpha-perfect input")]
    NotAlphaPerfect,
    #[error("comparison requires a perfect input")]
    NotPerfect,
    #[error(transparent)]
    Uce(#[from] UceError),
    #[error("induced map failed validation: {0}")]
    BadHom(#[from] MorphismError),
}

/// Maps a tensor-square vector into the exterior square coordinatewise.
fn wedge_of_tensor(dim: usize, v: &[Scalar]) -> Vec<Scalar> {
    let wedge = WedgeIndex::new(2, dim);
    let mut out = vec![Scalar::zero(); wedge.len()];
    for (flat, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (a, b) = (flat / dim, flat % dim);
        if let Some((sign, sorted)) = wedge.normalize(&[a, b]) {
            let idx = wedge.flatten(&sorted);
            let term = if sign < 0 { -c } else { c.clone() };
            out[idx] += &term;
        }
    }
    out
}

fn induced_pair_map(from: &UceResult, to: &UceResult) -> Result<Hom, CompareError> {
    let dim = from.base().dim();
    // relations must map into relations for the induced map to exist
    for r in from.relations.basis_rows() {
        let w = wedge_of_tensor(dim, &r);
        if !to.relations.contains(&w) {
            return Err(CompareError::NotHomLie);
        }
    }
    let mut m = Matrix::zero(to.dim(), from.dim());
    for (s, rep) in from.reps.iter().enumerate() {
        let w = wedge_of_tensor(dim, rep);
        let wcoords = to
            .domain
            .coordinates(&w)
            .ok_or(CompareError::NotAlphaPerfect)?;
        let mut cls = vec![Scalar::zero(); to.dim()];
        let rel_w: Vec<Scalar> = wcoords;
        // project through the quotient of the target
        let proj = quotient_project(to, &rel_w);
        cls.clone_from_slice(&proj);
        m.set_column(s, &cls);
    }
    Ok(Hom::new(&from.algebra, &to.algebra, m)?)
}

/// Projects W-coordinates of a target construction to its quotient basis.
fn quotient_project(res: &UceResult, wcoords: &[Scalar]) -> Vec<Scalar> {
    // rebuild the quotient projection: reduce modulo relations in W coords
    let rel_in_w: Vec<Vec<Scalar>> = res
        .relations
        .basis_rows()
        .into_iter()
        .map(|r| res.domain.coordinates(&r).expect("relations in domain"))
        .collect();
    let rel_w = Subspace::from_rows(res.domain.dim(), rel_in_w);
    QuotientSpace::new(res.domain.dim(), &rel_w).project_vec(wcoords)
}

/// Builds and checks the diagram relating the two alpha-restricted
/// constructions: the induced map covers the two projections, is surjective
/// with central kernel, and identifies the liezation of the tensor variant
/// with the exterior variant.
pub fn compare_alpha(base: &HomAlgebra) -> Result<AlphaComparison, CompareError> {
    if base.flavor() != Flavor::Lie {
        return Err(CompareError::NotHomLie);
    }
    if !base.perfectness().1 {
        return Err(CompareError::NotAlphaPerfect);
    }
    let leib = uce_alpha(base, UceSpace::Tensor)?;
    let lie = uce_alpha(base, UceSpace::Wedge)?;
    let phi = induced_pair_map(&leib, &lie)?;
    let covers = lie.u.matrix().mul(phi.matrix()) == *leib.u.matrix();
    let phi_surjective = phi.is_surjective();
    let phi_kernel_central = Extension::new(phi.clone())
        .map(|e| e.classification().is_central())
        .unwrap_or(false);

    // liezation of the tensor variant maps isomorphically onto the wedge one
    let liez = leib.algebra.liezation();
    let killed = liez
        .space
        .subspace()
        .basis_rows()
        .into_iter()
        .all(|v| vec_is_zero(&phi.matrix().apply(&v)));
    let induced = phi.matrix().mul(liez.space.section());
    let liezation_iso = killed
        && liez.algebra.dim() == lie.dim()
        && induced.rank() == lie.dim()
        && Hom::new(&liez.algebra, &lie.algebra, induced).is_ok();

    Ok(AlphaComparison {
        leib,
        lie,
        phi,
        covers,
        phi_surjective,
        phi_kernel_central,
        liezation_iso,
    })
}

/// Comparison of the classical (unrestricted) constructions over a perfect
/// Hom-Lie algebra, including the restriction of the canonical map to the
/// two kernels.
#[derive(Clone, Debug)]
pub struct ClassicalComparison {
    pub leib: UceResult,
    pub lie: UceResult,
    pub sigma: Hom,
    pub covers: bool,
    pub hl2_dim: usize,
    pub h2_dim: usize,
    pub sigma_iso: bool,
    pub sigma_restriction_iso: bool,
    /// The two bijectivity statements agree, as the equivalence asserts.
    pub equivalence_holds: bool,
}

pub fn compare_classical(base: &HomAlgebra) -> Result<ClassicalComparison, CompareError> {
    if base.flavor() != Flavor::Lie {
        return Err(CompareError::NotHomLie);
    }
    if !base.perfectness().0 {
        return Err(CompareError::NotPerfect);
    }
    let leib = uce_leibniz(base)?;
    let lie = uce_lie(base)?;
    let sigma = induced_pair_map(&leib, &lie)?;
    let covers = lie.u.matrix().mul(sigma.matrix()) == *leib.u.matrix();

    let hl2_dim = leib.kernel_dim();
    let h2_dim = lie.kernel_dim();
    let sigma_iso = leib.dim() == lie.dim() && sigma.matrix().rank() == lie.dim();

    // restriction of sigma to the kernels
    let mut restricted_images = Vec::new();
    for v in leib.kernel.basis_rows() {
        let img = sigma.matrix().apply(&v);
        debug_assert!(lie.kernel.contains(&img), "sigma respects kernels");
        restricted_images.push(img);
    }
    let restr_rank = Subspace::from_rows(lie.dim(), restricted_images).dim();
    let sigma_restriction_iso = hl2_dim == h2_dim && restr_rank == h2_dim;

    Ok(ClassicalComparison {
        covers,
        hl2_dim,
        h2_dim,
        sigma_iso,
        sigma_restriction_iso,
        equivalence_holds: sigma_iso == sigma_restriction_iso,
        leib,
        lie,
        sigma,
    })
}

/// One named instance check with its outcome.
#[derive(Clone, Debug, serde::Serialize)]
pub struct AuditCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct AuditReport {
    pub checks: Vec<AuditCheck>,
}

impl AuditReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Instance-level audit of the main theorem on one algebra: perfectness is
/// equivalent to a universal projection; the kernel of the projection has
/// the dimension of the second homology; and for a classical perfect input
/// (identity twist) the middle algebra of the universal central extension
/// has vanishing first and second homology.
pub fn theorem_audit(base: &HomAlgebra, cap: usize) -> Result<AuditReport, HomologyError> {
    let mut checks = Vec::new();
    let (perfect, _) = base.perfectness();
    let uce = match uce_leibniz(base) {
        Ok(u) => u,
        Err(e) => {
            return Ok(AuditReport {
                checks: vec![AuditCheck {
                    name: "construction".into(),
                    pass: false,
                    detail: e.to_string(),
                }],
            })
        }
    };

    checks.push(AuditCheck {
        name: "perfect iff universal projection".into(),
        pass: perfect == (uce.universal && uce.u.is_surjective()),
        detail: format!(
            "perfect={perfect}, universal={}, surjective={}",
            uce.universal,
            uce.u.is_surjective()
        ),
    });
    if !perfect {
        let onto_derived = uce.u.image() == base.derived();
        checks.push(AuditCheck {
            name: "projection maps onto the derived subalgebra".into(),
            pass: onto_derived,
            detail: format!("image dim {}", uce.u.image().dim()),
        });
    }

    let ground = crate::corep::HomCoRep::ground_field(base);
    let hl2 = homology::homology(&ground, 2, cap)?;
    checks.push(AuditCheck {
        name: "kernel dimension equals second homology".into(),
        pass: uce.kernel_dim() == hl2.dim,
        detail: format!("kernel {}, homology {}", uce.kernel_dim(), hl2.dim),
    });

    if perfect {
        checks.push(AuditCheck {
            name: "universal projection is a central extension".into(),
            pass: uce.centrality == Some(Centrality::Central),
            detail: format!("{:?}", uce.centrality),
        });
    }

    if perfect && base.alpha_is_identity() {
        let up = crate::corep::HomCoRep::ground_field(&uce.algebra);
        let h1 = homology::homology(&up, 1, cap)?;
        let h2 = homology::homology(&up, 2, cap)?;
        checks.push(AuditCheck {
            name: "middle algebra is homologically trivial in degrees 1 and 2".into(),
            pass: h1.dim == 0 && h2.dim == 0,
            detail: format!("h1 {}, h2 {}", h1.dim, h2.dim),
        });
    }

    Ok(AuditReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::corep::HomCoRep;

    #[test]
    fn uce_of_counterexample_k_is_the_full_tensor_square() {
        // every relation generator carries a zero twist factor, so I_K = 0
        let k = catalog::counterexample_k();
        let res = uce_leibniz(&k).unwrap();
        assert_eq!(res.dim(), 9);
        assert!(res.relations.is_zero());
        assert!(res.perfect && res.universal);
        assert!(res.validation.is_valid());
        assert_eq!(res.kernel_dim(), 6);
        assert_eq!(res.centrality, Some(Centrality::Central));
        // cross-module: kernel dim equals the second homology dimension
        let hl2 = homology::homology(&HomCoRep::ground_field(&k), 2, 4).unwrap();
        assert_eq!(res.kernel_dim(), hl2.dim);
    }

    #[test]
    fn uce_of_counterexample_base_l() {
        let l = catalog::counterexample_l();
        let res = uce_leibniz(&l).unwrap();
        assert_eq!(res.dim(), 4);
        assert_eq!(res.kernel_dim(), 2);
        let hl2 = homology::homology(&HomCoRep::ground_field(&l), 2, 4).unwrap();
        assert_eq!(hl2.dim, 2);
    }

    #[test]
    fn uce_of_abelian_is_warned_non_perfect() {
        let a = HomAlgebra::abelian(2, Matrix::identity(2), Flavor::Leibniz);
        let res = uce_leibniz(&a).unwrap();
        assert!(!res.perfect && !res.universal);
        assert!(res.u.matrix().is_zero());
        assert!(res.algebra.derived().is_zero());
    }

    #[test]
    fn uce_alpha_of_sqrt2_example_lie_mode() {
        let l = catalog::sqrt2_example();
        let res = uce_alpha(&l, UceSpace::Wedge).unwrap();
        // alpha invertible: the domain is the whole exterior square
        assert!(res.domain.is_full());
        assert_eq!(res.dim(), 3);
        assert!(res.universal);
        assert!(res.u.is_surjective());
        assert_eq!(res.centrality, Some(Centrality::Central));
        // the constructed algebra is itself alpha-perfect
        assert!(res.algebra.perfectness().1);
        // kernel dim = dim W - dim I - dim L = dim Ker d_2 - rank d_3
        let d2 = homology::lie_differential(&l, 2).unwrap();
        let d3 = homology::lie_differential(&l, 3).unwrap();
        let expected = (d2.cols() - d2.rank()) - d3.rank();
        assert_eq!(res.kernel_dim(), expected);
        assert_eq!(res.kernel_dim(), 0);
    }

    #[test]
    fn uce_alpha_of_sqrt2_example_tensor_mode() {
        let l = catalog::sqrt2_example();
        let res = uce_alpha(&l, UceSpace::Tensor).unwrap();
        assert!(res.domain.is_full());
        assert_eq!(res.domain.dim(), 9);
        assert!(res.universal);
        assert!(res.algebra.perfectness().1);
        // kernel of the projection = Ker d_2 / Im d_3 on the tensor complex
        let ground = HomCoRep::ground_field(&l);
        let hl2 = homology::homology(&ground, 2, 4).unwrap();
        assert_eq!(res.kernel_dim(), hl2.dim);
    }

    #[test]
    fn uce_lie_with_identity_twist_recovers_classical_h2() {
        // cross product algebra with identity twist: semisimple, H_2 = 0
        let l = catalog::cross_product(Matrix::identity(3), Flavor::Lie);
        assert!(l.validate().is_valid());
        let res = uce_lie(&l).unwrap();
        assert!(res.universal);
        assert_eq!(res.kernel_dim(), homology::lie_homology(&l, 2).unwrap().dim);
        assert_eq!(res.kernel_dim(), 0);
    }

    #[test]
    fn wedge_space_requires_lie_flavor() {
        let k = catalog::counterexample_k();
        assert!(matches!(uce_lie(&k), Err(UceError::NotHomLie)));
    }

    #[test]
    fn lift_over_identity_is_u_itself() {
        let k = catalog::counterexample_k();
        let res = uce_leibniz(&k).unwrap();
        let id = Extension::identity(&k);
        let lift = lift_over(&res, &id).unwrap();
        assert_eq!(lift.matrix(), res.u.matrix());
    }

    #[test]
    fn lift_over_pi_covers_and_is_unique() {
        let l = catalog::counterexample_l();
        let k = catalog::counterexample_k();
        let res = uce_leibniz(&l).unwrap();
        let pi = Extension::from_matrix(&k, &l, catalog::pi_matrix()).unwrap();
        let lift = lift_over(&res, &pi).unwrap();
        assert_eq!(pi.pi().matrix().mul(lift.matrix()), *res.u.matrix());
        // alternative preimages differing by kernel elements give the same lift
        let mut alt = canonical_preimages(pi.pi());
        for j in 0..alt.cols() {
            let col = alt.column(j);
            let bumped = crate::matrix::vec_add(&col, &unit_vec(3, 0));
            alt.set_column(j, &bumped);
        }
        let lift2 = lift_over_with_preimages(&res, &pi, &alt).unwrap();
        assert_eq!(lift.matrix(), lift2.matrix());
    }

    #[test]
    fn lift_requires_centrality() {
        // the repaired composition is only alpha-central, so the plain
        // tensor-square construction refuses to lift over it
        let l = catalog::counterexample_l();
        let f = catalog::counterexample_f_repaired();
        let res = uce_leibniz(&l).unwrap();
        let comp = Extension::from_matrix(&f, &l, catalog::pi_matrix().mul(&catalog::rho_matrix())).unwrap();
        assert_eq!(comp.classification(), Centrality::AlphaCentralOnly);
        assert!(matches!(
            lift_over(&res, &comp),
            Err(LiftError::LiftIllDefined(Centrality::AlphaCentralOnly))
        ));
    }

    #[test]
    fn lift_over_alpha_central_target_for_alpha_variant() {
        let l = catalog::sqrt2_example();
        let res = uce_alpha(&l, UceSpace::Wedge).unwrap();
        let id = Extension::identity(&l);
        let lift = lift_over(&res, &id).unwrap();
        assert_eq!(lift.matrix(), res.u.matrix());
    }

    #[test]
    fn compare_alpha_on_sqrt2_example() {
        let l = catalog::sqrt2_example();
        let cmp = compare_alpha(&l).unwrap();
        assert!(cmp.covers);
        assert!(cmp.phi_surjective);
        assert!(cmp.phi_kernel_central);
        assert!(cmp.liezation_iso);
        assert_eq!(
            cmp.leib.dim() - cmp.lie.dim(),
            cmp.phi.kernel().dim(),
            "kernel of the induced map accounts for the dimension gap"
        );
    }

    #[test]
    fn compare_alpha_rejects_non_alpha_perfect() {
        let a = HomAlgebra::abelian(2, Matrix::identity(2), Flavor::Lie);
        assert!(matches!(
            compare_alpha(&a),
            Err(CompareError::NotAlphaPerfect)
        ));
    }

    #[test]
    fn compare_classical_on_identity_twist_cross_product() {
        let l = catalog::cross_product(Matrix::identity(3), Flavor::Lie);
        let cmp = compare_classical(&l).unwrap();
        assert!(cmp.covers);
        assert!(cmp.equivalence_holds);
        assert_eq!(cmp.h2_dim, 0);
    }

    #[test]
    fn audit_counterexample_k() {
        let k = catalog::counterexample_k();
        let report = theorem_audit(&k, 4).unwrap();
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn audit_abelian_is_consistent() {
        let a = HomAlgebra::abelian(2, Matrix::identity(2), Flavor::Leibniz);
        let report = theorem_audit(&a, 4).unwrap();
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn audit_classical_perfect_lie() {
        let l = catalog::cross_product(Matrix::identity(3), Flavor::Lie);
        let report = theorem_audit(&l, 4).unwrap();
        assert!(report.all_pass(), "{report:?}");
    }
}
