//! The law catalog run by `stabhom verify`.
//!
//! Every law walks a seeded module catalog and stops at its first falsifying witness.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use stabhom_core::algebra::{
    direct_sum, indec_injective, indec_projective, regular_module, simple, Algebra, ModuleMap, Representation, Side,
};
use stabhom_core::catalog::{draw_module, random_fp_morphism, random_hom};
use stabhom_core::exactla::Subspace;
use stabhom_core::fpfun::{
    fp_cokernel, fp_defect, fp_dim, fp_kernel, fp_substab, present_overline_contra, present_overline_cov,
    present_tensor, present_tensor_substab, present_torsion_radical, present_underline_contra,
    present_underline_cov, FpFunctor, Variance,
};
use stabhom_core::homology::{
    eval_double_dual, ext1, hom_basis, injective_envelope, is_injective, projective_cover,
    projective_multiplicity, star_dual, tensor, tensor_map_left, tensor_map_right, transpose,
};
use stabhom_core::stable::{
    bass_torsion, cotorsion_trace, fp_certificate, hereditary_split, is_left_proj_approximation,
    is_right_inj_approximation, left_proj_approximation, stable_hom, tensor_substab, torsion_radical,
    torsionless_quotient, CertificateKind, Flavor, TorsionMethod,
};

use crate::format::ModuleFile;
use crate::oracle::cocycle_ext_dim;

/// Modules, computed values and (when a library call failed) its error.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub modules: Vec<ModuleFile>,
    pub values: BTreeMap<String, String>,
}

impl Witness {
    pub fn new(modules: &[&Representation]) -> Witness {
        Witness { modules: modules.iter().map(|m| ModuleFile::bare(m)).collect(), values: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Witness {
        self.values.insert(key.to_string(), value.to_string());
        self
    }
}

type LawResult = Result<(), Witness>;

trait At<T> {
    fn at(self, modules: &[&Representation]) -> Result<T, Witness>;
}

impl<T> At<T> for stabhom_core::Result<T> {
    fn at(self, modules: &[&Representation]) -> Result<T, Witness> {
        self.map_err(|e| Witness::new(modules).with("error", e))
    }
}

#[derive(Debug, Default)]
pub struct Tally {
    pub checks: usize,
}

impl Tally {
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Witness) -> LawResult {
        self.checks += 1;
        if ok {
            Ok(())
        } else {
            Err(witness())
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GenerationStats {
    pub draws: usize,
    pub attempts: usize,
    pub fallbacks: usize,
}

/// A functor from the suite's functor set, labelled by how it was built.
#[derive(Debug, Clone)]
pub struct LabeledFunctor {
    pub label: String,
    pub functor: FpFunctor,
    pub side: Side,
}

const RANDOM_PROBES: usize = 8;
const MIN_EVALUATION_PROBES: usize = 20;

/// Seeded module catalog for one algebra: `count` random modules per side, and per side the
/// probe set of all simples, indecomposable projectives and injectives plus 8 random modules.
pub struct Catalog {
    pub algebra: Algebra,
    pub seed: u64,
    pub count: usize,
    pub max_dim: usize,
    pub left: Vec<Representation>,
    pub right: Vec<Representation>,
    pub left_probes: Vec<Representation>,
    pub right_probes: Vec<Representation>,
    pub stats: GenerationStats,
    functors: OnceLock<Result<Vec<LabeledFunctor>, Witness>>,
}

const STREAM_LEFT: u64 = 0;
const STREAM_RIGHT: u64 = 1;
const STREAM_LEFT_PROBES: u64 = 2;
const STREAM_RIGHT_PROBES: u64 = 3;
const STREAM_MAPS: u64 = 4;
const STREAM_MORPHISMS: u64 = 5;

pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

impl Catalog {
    pub fn generate(algebra: &Algebra, seed: u64, count: usize, max_dim: usize) -> Catalog {
        let mut stats = GenerationStats::default();
        let draw = |side: Side, n: usize, stream: u64, stats: &mut GenerationStats| {
            let mut rng = stream_rng(seed, stream);
            (0..n)
                .map(|_| {
                    let d = draw_module(algebra, side, max_dim, &mut rng);
                    stats.draws += 1;
                    stats.attempts += d.attempts;
                    stats.fallbacks += d.fallback as usize;
                    d.module
                })
                .collect::<Vec<_>>()
        };
        let left = draw(Side::Left, count, STREAM_LEFT, &mut stats);
        let right = draw(Side::Right, count, STREAM_RIGHT, &mut stats);
        let mut left_probes = named_probes(algebra, Side::Left);
        left_probes.extend(draw(Side::Left, RANDOM_PROBES, STREAM_LEFT_PROBES, &mut stats));
        let mut right_probes = named_probes(algebra, Side::Right);
        right_probes.extend(draw(Side::Right, RANDOM_PROBES, STREAM_RIGHT_PROBES, &mut stats));
        Catalog {
            algebra: algebra.clone(),
            seed,
            count,
            max_dim,
            left,
            right,
            left_probes,
            right_probes,
            stats,
            functors: OnceLock::new(),
        }
    }

    pub fn modules(&self, side: Side) -> &[Representation] {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub fn probes(&self, side: Side) -> &[Representation] {
        match side {
            Side::Left => &self.left_probes,
            Side::Right => &self.right_probes,
        }
    }

    /// Catalog modules followed by probes.
    pub fn everything(&self, side: Side) -> impl Iterator<Item = &Representation> {
        self.modules(side).iter().chain(self.probes(side))
    }

    /// Probes, topped up with catalog modules to at least 20 when the catalog allows.
    pub fn evaluation_probes(&self, side: Side) -> Vec<&Representation> {
        let mut out: Vec<&Representation> = self.probes(side).iter().collect();
        let missing = MIN_EVALUATION_PROBES.saturating_sub(out.len());
        out.extend(self.modules(side).iter().take(missing));
        out
    }

    /// For each side: the four stable-Hom presentations and both representables at every
    /// catalog module of that side, and the tensor functor of every catalog module of the
    /// other side.
    pub fn functors(&self) -> Result<&[LabeledFunctor], Witness> {
        self.functors.get_or_init(|| build_functors(self)).as_ref().map(Vec::as_slice).map_err(Clone::clone)
    }
}

pub fn named_probes(algebra: &Algebra, side: Side) -> Vec<Representation> {
    let mut out = Vec::new();
    for v in 0..algebra.num_vertices() {
        out.push(simple(algebra, v, side).expect("vertex in range"));
    }
    for v in 0..algebra.num_vertices() {
        out.push(indec_projective(algebra, v, side).expect("vertex in range"));
    }
    for v in 0..algebra.num_vertices() {
        out.push(indec_injective(algebra, v, side).expect("vertex in range"));
    }
    out
}

fn build_functors(cat: &Catalog) -> Result<Vec<LabeledFunctor>, Witness> {
    let mut out = Vec::new();
    for side in [Side::Left, Side::Right] {
        let zero = Representation::zero(&cat.algebra, side);
        for (i, a) in cat.modules(side).iter().enumerate() {
            let mut push = |label: &str, functor: FpFunctor| {
                out.push(LabeledFunctor { label: format!("{label}[{side:?} {i}]"), functor, side })
            };
            push("underline-cov", present_underline_cov(a).at(&[a])?);
            push("overline-cov", present_overline_cov(a).at(&[a])?);
            push("underline-contra", present_underline_contra(a).at(&[a])?);
            push("overline-contra", present_overline_contra(a).at(&[a])?);
            push("representable-cov", FpFunctor::new(ModuleMap::zero(a, &zero), Variance::Covariant));
            push("representable-contra", FpFunctor::new(ModuleMap::zero(&zero, a), Variance::Contravariant));
        }
        for (i, a) in cat.modules(side.flip()).iter().enumerate() {
            let t = present_tensor(a).at(&[a])?;
            out.push(LabeledFunctor { label: format!("tensor[{:?} {i}]", side.flip()), functor: t.functor, side });
        }
    }
    Ok(out)
}

type LawFn = fn(&Catalog, &mut Tally) -> LawResult;

/// All laws, sorted by name.
pub const LAWS: &[(&str, LawFn)] = &[
    ("certificates", certificates),
    ("defect-lemma", defect_lemma),
    ("double-dual-torsionless", double_dual_torsionless),
    ("ext-cocycle-agreement", ext_cocycle_agreement),
    ("fp-kernel-cokernel", fp_kernel_cokernel),
    ("hereditary-split", hereditary_split_law),
    ("hom-injective-identity", hom_injective_identity),
    ("hom-projective-identity", hom_projective_identity),
    ("presentation-agreement", presentation_agreement),
    ("quasi-frobenius", quasi_frobenius),
    ("radical-law", radical_law),
    ("stable-hom-dims", stable_hom_dims),
    ("substab-injectives", substab_injectives),
    ("tensor-ext", tensor_ext),
    ("tensor-presentation", tensor_presentation),
    ("tensor-unit", tensor_unit),
    ("torsion-agreement", torsion_agreement),
    ("torsion-kills-injectives", torsion_kills_injectives),
    ("torsion-radical", torsion_radical_law),
    ("torsionless-embedding", torsionless_embedding),
    ("trace-idempotence", trace_idempotence),
    ("transpose-involution", transpose_involution),
];

pub fn law_names() -> impl Iterator<Item = &'static str> {
    LAWS.iter().map(|(n, _)| *n)
}

pub fn find_law(name: &str) -> Option<LawFn> {
    LAWS.iter().find(|(n, _)| *n == name).map(|(_, f)| *f)
}

const SIDES: [Side; 2] = [Side::Left, Side::Right];

fn hom_projective_identity(cat: &Catalog, t: &mut Tally) -> LawResult {
    for side in SIDES {
        for v in 0..cat.algebra.num_vertices() {
            let p = indec_projective(&cat.algebra, v, side).expect("vertex in range");
            for m in cat.everything(side) {
                let d = hom_basis(&p, m).at(&[m])?.dim();
                t.check(d == m.dim_at(v), || {
                    Witness::new(&[m]).with("vertex", v).with("dim Hom(P(v), m)", d).with("dim m_v", m.dim_at(v))
                })?;
            }
        }
    }
    Ok(())
}

fn hom_injective_identity(cat: &Catalog, t: &mut Tally) -> LawResult {
    for side in SIDES {
        for v in 0..cat.algebra.num_vertices() {
            let i = indec_injective(&cat.algebra, v, side).expect("vertex in range");
            for m in cat.everything(side) {
                let d = hom_basis(m, &i).at(&[m])?.dim();
                t.check(d == m.dim_at(v), || {
                    Witness::new(&[m]).with("vertex", v).with("dim Hom(m, I(v))", d).with("dim m_v", m.dim_at(v))
                })?;
            }
        }
    }
    Ok(())
}

fn ext_cocycle_agreement(cat: &Catalog, t: &mut Tally) -> LawResult {
    for side in SIDES {
        for m in cat.modules(side) {
            for b in cat.probes(side) {
                for (x, y) in [(m, b), (b, m)] {
                    let cover = ext1(x, y).at(&[x, y])?.dim();
                    let cocycle = cocycle_ext_dim(x, y);
                    t.check(cover == cocycle, || {
                        Witness::new(&[x, y]).with("cover sequence", cover).with("cocycles", cocycle)
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn map_rank(f: &ModuleMap) -> usize {
    f.vertex_maps().iter().map(|m| m.rank()).sum()
}

fn tensor_unit(cat: &Catalog, t: &mut Tally) -> LawResult {
    let alg = &cat.algebra;
    let lam_left = regular_module(alg, Side::Left);
    let lam_right = regular_module(alg, Side::Right);
    let mut rng = stream_rng(cat.seed, STREAM_MAPS);
    for b in cat.everything(Side::Left) {
        let d = tensor(&lam_right, b).at(&[b])?.dim();
        t.check(d == b.total_dim(), || Witness::new(&[b]).with("dim Λ⊗b", d))?;
    }
    for a in cat.everything(Side::Right) {
        let d = tensor(a, &lam_left).at(&[a])?.dim();
        t.check(d == a.total_dim(), || Witness::new(&[a]).with("dim a⊗Λ", d))?;
    }
    // naturality: under Λ⊗b ≅ b the map 1⊗g is g, so ranks agree
    for pair in cat.modules(Side::Left).windows(2) {
        let g = random_hom(&pair[0], &pair[1], &mut rng);
        let (_, _, m) = tensor_map_right(&lam_right, &g).at(&pair.iter().collect::<Vec<_>>())?;
        t.check(m.rank() == map_rank(&g), || {
            Witness::new(&[&pair[0], &pair[1]]).with("rank 1⊗g", m.rank()).with("rank g", map_rank(&g))
        })?;
    }
    for pair in cat.modules(Side::Right).windows(2) {
        let f = random_hom(&pair[0], &pair[1], &mut rng);
        let (_, _, m) = tensor_map_left(&f, &lam_left).at(&pair.iter().collect::<Vec<_>>())?;
        t.check(m.rank() == map_rank(&f), || {
            Witness::new(&[&pair[0], &pair[1]]).with("rank f⊗1", m.rank()).with("rank f", map_rank(&f))
        })?;
    }
    Ok(())
}

fn transpose_involution(cat: &Catalog, t: &mut Tally) -> LawResult {
    for side in SIDES {
        for m in cat.everything(side) {
            let tr = transpose(m).at(&[m])?;
            t.check(tr.is_exact(), || Witness::new(&[m]).with("transpose sequence", "not exact"))?;
            let mut projective_free = true;
            for v in 0..cat.algebra.num_vertices() {
                projective_free &= projective_multiplicity(m, v).at(&[m])? == 0;
            }
            if projective_free {
                let back = transpose(&tr.module).at(&[m])?.module;
                t.check(back.dims() == m.dims(), || {
                    Witness::new(&[m, &back]).with("dims Tr Tr m", format!("{:?}", back.dims()))
                })?;
            }
        }
    }
    Ok(())
}

fn double_dual_torsionless(cat: &Catalog, t: &mut Tally) -> LawResult {
    for side in SIDES {
        for m in cat.everything(side) {
            let injective = eval_double_dual(m).at(&[m])?.is_injective();
            let torsionless = bass_torsion(m, TorsionMethod::Reject).at(&[m])?.is_zero();
            t.check(injective == torsionless, || {
                Witness::new(&[m]).with("evaluation injective", injective).with("reject zero", torsionless)
            })?;
        }
    }
    Ok(())
}

fn torsion_agreement(cat: &Catalog, t: &mut Tally) -> LawResult {
    for side in SIDES {
        for m in cat.everything(side) {
            let e = bass_torsion(m, TorsionMethod::Evaluation).at(&[m])?;
            let r = bass_torsion(m, TorsionMethod::Reject).at(&[m])?;
            let a = bass_torsion(m, TorsionMethod::Approximation).at(&[m])?;
            t.check(e == r && r == a, || {
                Witness::new(&[m])
                    .with("evaluation", format!("{:?}", e.dims()))
                    .with("reject", format!("{:?}", r.dims()))
                    .with("approximation", format!("{:?}", a.dims()))
            })?;
        }
    }
    Ok(())
}

fn radical_law(cat: &Catalog, t: &mut Tally) -> LawResult {
    for side in SIDES {
        for m in cat.everything(side) {
            let (q, _) = torsionless_quotient(m).at(&[m])?;
            let tq = bass_torsion(&q, TorsionMethod::Reject).at(&[m, &q])?;
            t.check(tq.is_zero(), || Witness::new(&[m, &q]).with("dims 𝔱(𝔱⁻¹(m))", format!("{:?}", tq.dims())))?;
        }
    }
    Ok(())
}

fn trace_idempotence(cat: &Catalog, t: &mut Tally) -> LawResult {
    for side in SIDES {
        for m in cat.everything(side) {
            let (tr, _) = cotorsion_trace(m).at(&[m])?.to_module();
            let again = cotorsion_trace(&tr).at(&[m, &tr])?;
            t.check(again.is_whole(), || {
                Witness::new(&[m, &tr]).with("dims 𝔮⁻¹(𝔮⁻¹(m))", format!("{:?}", again.dims()))
            })?;
        }
    }
    Ok(())
}

fn stable_hom_dims(cat: &Catalog, t: &mut Tally) -> LawResult {
    let alg = &cat.algebra;
    for side in SIDES {
        let lam = regular_module(alg, side);
        let injectives: Vec<Representation> =
            (0..alg.num_vertices()).map(|v| indec_injective(alg, v, side).expect("vertex in range")).collect();
        let cogenerator = direct_sum(alg, side, &injectives).expect("same algebra").module;
        for m in cat.modules(side) {
            for b in cat.probes(side) {
                for flavor in [Flavor::ModuloProjectives, Flavor::ModuloInjectives] {
                    let s = stable_hom(m, b, flavor).at(&[m, b])?;
                    t.check(s.dim() == s.hom.dim() - s.factoring.dim() && s.projection.rows() == s.dim(), || {
                        Witness::new(&[m, b])
                            .with("flavor", format!("{flavor:?}"))
                            .with("stable", s.dim())
                            .with("hom", s.hom.dim())
                            .with("factoring", s.factoring.dim())
                    })?;
                }
            }
            let under = stable_hom(&lam, m, Flavor::ModuloProjectives).at(&[m])?.dim();
            t.check(under == 0, || Witness::new(&[m]).with("dim underline Hom(Λ, m)", under))?;
            let over = stable_hom(m, &cogenerator, Flavor::ModuloInjectives).at(&[m])?.dim();
            t.check(over == 0, || Witness::new(&[m]).with("dim overline Hom(m, DΛ)", over))?;
        }
    }
    Ok(())
}

fn torsionless_embedding(cat: &Catalog, t: &mut Tally) -> LawResult {
    for side in SIDES {
        for m in cat.everything(side) {
            if bass_torsion(m, TorsionMethod::Reject).at(&[m])?.is_zero() {
                let approx = left_proj_approximation(m).at(&[m])?;
                t.check(approx.map.is_injective(), || Witness::new(&[m]).with("approximation", "not injective"))?;
            }
        }
    }
    Ok(())
}

fn torsion_kills_injectives(cat: &Catalog, t: &mut Tally) -> LawResult {
    let alg = &cat.algebra;
    let injectives: Vec<Representation> =
        (0..alg.num_vertices()).map(|v| indec_injective(alg, v, Side::Left).expect("vertex in range")).collect();
    for a in cat.everything(Side::Right) {
        if star_dual(a).at(&[a])?.module.is_zero() {
            for (v, i) in injectives.iter().enumerate() {
                let d = tensor(a, i).at(&[a])?.dim();
                t.check(d == 0, || Witness::new(&[a]).with("vertex", v).with("dim a⊗I(v)", d))?;
            }
        }
    }
    Ok(())
}

fn tensor_ext(cat: &Catalog, t: &mut Tally) -> LawResult {
    let rights: Vec<&Representation> = cat.everything(Side::Right).collect();
    let lefts: Vec<&Representation> = cat.everything(Side::Left).collect();
    let mut pairs: Vec<(&Representation, &Representation)> =
        cat.modules(Side::Right).iter().zip(cat.modules(Side::Left)).collect();
    for a in &rights {
        pairs.extend(cat.probes(Side::Left).iter().map(|b| (*a, b)));
    }
    for b in &lefts {
        pairs.extend(cat.probes(Side::Right).iter().map(|a| (a, *b)));
    }
    for (a, b) in pairs {
        let sub = tensor_substab(a, b).at(&[a, b])?.dim();
        let tr = transpose(a).at(&[a])?.module;
        let e = ext1(&tr, b).at(&[a, b])?.dim();
        t.check(sub == e, || Witness::new(&[a, b, &tr]).with("dim a⊗̄b", sub).with("dim Ext¹(Tr a, b)", e))?;
    }
    Ok(())
}

fn certificates(cat: &Catalog, t: &mut Tally) -> LawResult {
    for side in SIDES {
        for m in cat.everything(side) {
            for kind in [CertificateKind::CovariantUnderline, CertificateKind::ContravariantOverline] {
                let c = fp_certificate(m, kind).at(&[m])?;
                t.check(c.is_exact() && c.vanishing_holds() && c.defect_iso.is_isomorphism(), || {
                    Witness::new(&[m])
                        .with("kind", format!("{kind:?}"))
                        .with("exact", c.is_exact())
                        .with("vanishing", format!("{:?}", c.vanishing))
                        .with("defect iso", c.defect_iso.is_isomorphism())
                })?;
            }
        }
    }
    Ok(())
}

/// Self-injective: the regular module is injective.
pub fn is_self_injective(alg: &Algebra) -> stabhom_core::Result<bool> {
    is_injective(&regular_module(alg, Side::Left))
}

fn quasi_frobenius(cat: &Catalog, t: &mut Tally) -> LawResult {
    let lam = regular_module(&cat.algebra, Side::Left);
    if !is_self_injective(&cat.algebra).at(&[&lam])? {
        return Ok(());
    }
    for side in SIDES {
        for m in cat.everything(side) {
            let env = injective_envelope(m).at(&[m])?;
            let left = is_left_proj_approximation(&env.inclusion).at(&[m])?;
            let cover = projective_cover(m).at(&[m])?;
            let right = is_right_inj_approximation(&cover.surjection).at(&[m])?;
            t.check(left && right, || {
                Witness::new(&[m]).with("envelope is left approximation", left).with("cover is right approximation", right)
            })?;
        }
    }
    Ok(())
}

fn hereditary_split_law(cat: &Catalog, t: &mut Tally) -> LawResult {
    if !cat.algebra.is_hereditary() {
        return Ok(());
    }
    for side in SIDES {
        let partners: Vec<Representation> = cat.everything(side).cloned().collect();
        for m in cat.modules(side) {
            let split = hereditary_split(m, &partners);
            t.check(split.is_ok(), || Witness::new(&[m]).with("error", split.as_ref().unwrap_err()))?;
        }
    }
    Ok(())
}

fn defect_lemma(cat: &Catalog, t: &mut Tally) -> LawResult {
    let alg = &cat.algebra;
    for lf in cat.functors()? {
        let f = &lf.functor;
        let x = f.x();
        match f.variance {
            Variance::Covariant => {
                let w = fp_defect(f).at(&[x])?.module;
                let mut vanishes = true;
                for v in 0..alg.num_vertices() {
                    let i = indec_injective(alg, v, lf.side).expect("vertex in range");
                    vanishes &= fp_dim(f, &i).at(&[x])? == 0;
                }
                t.check(w.is_zero() == vanishes, || {
                    Witness::new(&[f.presentation.domain(), f.presentation.codomain()])
                        .with("functor", &lf.label)
                        .with("dims w(F)", format!("{:?}", w.dims()))
                        .with("vanishes on injectives", vanishes)
                })?;
            }
            Variance::Contravariant => {
                let (v_mod, _) = f.presentation.cokernel();
                let at_lam = fp_dim(f, &regular_module(alg, lf.side)).at(&[x])?;
                t.check(v_mod.is_zero() == (at_lam == 0), || {
                    Witness::new(&[f.presentation.domain(), f.presentation.codomain()])
                        .with("functor", &lf.label)
                        .with("dims v(F)", format!("{:?}", v_mod.dims()))
                        .with("dim F(Λ)", at_lam)
                })?;
            }
        }
    }
    Ok(())
}

fn fp_kernel_cokernel(cat: &Catalog, t: &mut Tally) -> LawResult {
    let functors = cat.functors()?;
    if functors.is_empty() {
        return Ok(());
    }
    let mut rng = stream_rng(cat.seed, STREAM_MORPHISMS);
    use rand_chacha::rand_core::RngCore;
    for _ in 0..cat.count {
        let i = (rng.next_u64() % functors.len() as u64) as usize;
        let src = &functors[i];
        let partners: Vec<&LabeledFunctor> = functors
            .iter()
            .filter(|g| g.side == src.side && g.functor.variance == src.functor.variance)
            .collect();
        let dst = partners[(rng.next_u64() % partners.len() as u64) as usize];
        let alpha = random_fp_morphism(&src.functor, &dst.functor, &mut rng);
        let witness = |b: &Representation, what: &str| {
            Witness::new(&[b])
                .with("source", &src.label)
                .with("target", &dst.label)
                .with("failure", what)
        };
        let (_, incl) = fp_kernel(&alpha).at(&[])?;
        let (_, proj) = fp_cokernel(&alpha).at(&[])?;
        for b in cat.evaluation_probes(src.side) {
            let (fb, _, ab) = alpha.evaluate_at(b).at(&[b])?;
            let (kb, _, ib) = incl.evaluate_at(b).at(&[b])?;
            let image = Subspace::from_columns(&ib);
            t.check(ib.rank() == kb.dim() && image == ab.kernel_basis(), || witness(b, "kernel"))?;
            let (gb, cb, qb) = proj.evaluate_at(b).at(&[b])?;
            t.check(
                qb.rank() == cb.dim() && qb.kernel_basis() == Subspace::from_columns(&ab) && gb.dim() == ab.rows(),
                || witness(b, "cokernel").with("dim F(b)", fb.dim()),
            )?;
        }
    }
    Ok(())
}

fn substab_injectives(cat: &Catalog, t: &mut Tally) -> LawResult {
    let alg = &cat.algebra;
    for lf in cat.functors()? {
        if lf.functor.variance != Variance::Covariant {
            continue;
        }
        let f = &lf.functor;
        let ms = [f.presentation.domain(), f.presentation.codomain()];
        let (sub, _) = fp_substab(f).at(&ms)?;
        for v in 0..alg.num_vertices() {
            let i = indec_injective(alg, v, lf.side).expect("vertex in range");
            let d = fp_dim(&sub, &i).at(&ms)?;
            t.check(d == 0, || Witness::new(&ms).with("functor", &lf.label).with("vertex", v).with("dim", d))?;
        }
    }
    Ok(())
}

fn presentation_agreement(cat: &Catalog, t: &mut Tally) -> LawResult {
    for side in SIDES {
        for a in cat.modules(side) {
            let uc = present_underline_cov(a).at(&[a])?;
            let oc = present_overline_cov(a).at(&[a])?;
            let ux = present_underline_contra(a).at(&[a])?;
            let ox = present_overline_contra(a).at(&[a])?;
            for b in cat.probes(side) {
                let checks = [
                    ("underline (a, b)", &uc, stable_hom(a, b, Flavor::ModuloProjectives)),
                    ("overline (a, b)", &oc, stable_hom(a, b, Flavor::ModuloInjectives)),
                    ("underline (b, a)", &ux, stable_hom(b, a, Flavor::ModuloProjectives)),
                    ("overline (b, a)", &ox, stable_hom(b, a, Flavor::ModuloInjectives)),
                ];
                for (name, functor, direct) in checks {
                    let direct = direct.at(&[a, b])?.dim();
                    let presented = fp_dim(functor, b).at(&[a, b])?;
                    t.check(direct == presented, || {
                        Witness::new(&[a, b]).with("stable Hom", name).with("direct", direct).with("presented", presented)
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn tensor_presentation(cat: &Catalog, t: &mut Tally) -> LawResult {
    for side in SIDES {
        for a in cat.modules(side) {
            let tp = present_tensor(a).at(&[a])?;
            let w = fp_defect(&tp.functor).at(&[a])?.module;
            let dual = star_dual(a).at(&[a])?.module;
            t.check(w.dims() == dual.dims(), || {
                Witness::new(&[a]).with("dims w", format!("{:?}", w.dims())).with("dims a*", format!("{:?}", dual.dims()))
            })?;
            let substab = if side == Side::Right {
                Some((present_tensor_substab(a).at(&[a])?, fp_substab(&tp.functor).at(&[a])?.0))
            } else {
                None
            };
            for b in cat.probes(side.flip()) {
                let presented = fp_dim(&tp.functor, b).at(&[a, b])?;
                let direct = match side {
                    Side::Right => tensor(a, b),
                    Side::Left => tensor(b, a),
                }
                .at(&[a, b])?
                .dim();
                t.check(presented == direct, || {
                    Witness::new(&[a, b]).with("presented", presented).with("coequalizer", direct)
                })?;
                if let Some((image, kernel)) = &substab {
                    let s1 = fp_dim(image, b).at(&[a, b])?;
                    let s2 = fp_dim(kernel, b).at(&[a, b])?;
                    let s3 = tensor_substab(a, b).at(&[a, b])?.dim();
                    t.check(s1 == s2 && s2 == s3, || {
                        Witness::new(&[a, b])
                            .with("image presentation", s1)
                            .with("substabilized functor", s2)
                            .with("coequalizer kernel", s3)
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn torsion_radical_law(cat: &Catalog, t: &mut Tally) -> LawResult {
    let alg = &cat.algebra;
    let s = present_torsion_radical(alg).at(&[])?;
    for v in 0..alg.num_vertices() {
        let p = indec_projective(alg, v, Side::Right).expect("vertex in range");
        let d = torsion_radical(&p).at(&[&p])?.dim();
        t.check(d == 0, || Witness::new(&[&p]).with("dim 𝔰(P)", d))?;
    }
    for a in cat.everything(Side::Right) {
        let direct = torsion_radical(a).at(&[a])?.dim();
        let presented = fp_dim(&s, a).at(&[a])?;
        t.check(direct == presented, || Witness::new(&[a]).with("direct", direct).with("presented", presented))?;
    }
    Ok(())
}
