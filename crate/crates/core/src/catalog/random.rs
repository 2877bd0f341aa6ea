use alloc::vec::Vec;

use rand_core::RngCore;

use crate::algebra::{direct_sum, indec_injective, indec_projective, Algebra, ModuleMap, Representation, Side};
use crate::exactla::{Field, Matrix, Scalar};
use crate::fpfun::{FpFunctor, FpMorphism, Variance};
use crate::homology::hom_basis;

fn below(rng: &mut dyn RngCore, n: u64) -> u64 {
    rng.next_u64() % n
}

/// Uniform over a prime field; integers in `[-2, 2]` over the rationals.
pub fn random_scalar(field: Field, rng: &mut dyn RngCore) -> Scalar {
    match field {
        Field::Prime(p) => Scalar::Mod(below(rng, p)),
        Field::Rational => field.from_i64(below(rng, 5) as i64 - 2),
    }
}

pub fn random_matrix(field: Field, rows: usize, cols: usize, rng: &mut dyn RngCore) -> Matrix {
    let entries = (0..rows * cols).map(|_| random_scalar(field, rng)).collect();
    Matrix::new(field, rows, cols, entries).expect("shape")
}

/// A random element of `Hom(a, b)`.
pub fn random_hom(a: &Representation, b: &Representation, rng: &mut dyn RngCore) -> ModuleMap {
    let hom = hom_basis(a, b).expect("same category");
    let coeffs = random_matrix(a.field(), 1, hom.dim(), rng);
    hom.element(&coeffs)
}

fn random_sum(
    algebra: &Algebra,
    side: Side,
    count: usize,
    rng: &mut dyn RngCore,
    make: fn(&Algebra, usize, Side) -> crate::Result<Representation>,
) -> Representation {
    let n = algebra.num_vertices() as u64;
    let parts: Vec<Representation> =
        (0..count).map(|_| make(algebra, below(rng, n) as usize, side).expect("vertex in range")).collect();
    direct_sum(algebra, side, &parts).expect("same algebra").module
}

/// A generated module with the number of draws it took.
#[derive(Debug, Clone)]
pub struct Draw {
    pub module: Representation,
    pub attempts: usize,
    /// Every draw exceeded the dimension bound and a simple module was returned instead.
    pub fallback: bool,
}

const MAX_ATTEMPTS: usize = 16;

/// A random module with every vertex dimension at most `max_dim`.
pub fn random_module(algebra: &Algebra, side: Side, max_dim: usize, rng: &mut dyn RngCore) -> Representation {
    draw_module(algebra, side, max_dim, rng).module
}

/// Without relations (acyclic quivers only) dimensions and arrow matrices are uniform. With
/// relations the module is the cokernel of a random map between sums of indecomposable
/// projectives, or the kernel of one between sums of indecomposable injectives; draws that
/// exceed `max_dim` are retried a bounded number of times before falling back to a simple.
pub fn draw_module(algebra: &Algebra, side: Side, max_dim: usize, rng: &mut dyn RngCore) -> Draw {
    let field = algebra.field();
    if algebra.is_hereditary() {
        let dims: Vec<usize> = (0..algebra.num_vertices()).map(|_| below(rng, max_dim as u64 + 1) as usize).collect();
        let acting = if side == Side::Left { algebra.clone() } else { algebra.opposite() };
        let maps = (0..acting.num_arrows())
            .map(|a| random_matrix(field, dims[acting.arrow_target(a)], dims[acting.arrow_source(a)], rng))
            .collect();
        let module = Representation::new(algebra, side, dims, maps).expect("relation-free module");
        return Draw { module, attempts: 1, fallback: false };
    }
    for attempt in 1..=MAX_ATTEMPTS {
        let big = 1 + below(rng, 3) as usize;
        let small = below(rng, 4) as usize;
        let m = if rng.next_u64().is_multiple_of(2) {
            let target = random_sum(algebra, side, big, rng, indec_projective);
            let source = random_sum(algebra, side, small, rng, indec_projective);
            random_hom(&source, &target, rng).cokernel().0
        } else {
            let source = random_sum(algebra, side, big, rng, indec_injective);
            let target = random_sum(algebra, side, small, rng, indec_injective);
            random_hom(&source, &target, rng).kernel().to_module().0
        };
        if m.dims().iter().all(|&d| d <= max_dim) {
            return Draw { module: m, attempts: attempt, fallback: false };
        }
    }
    let v = below(rng, algebra.num_vertices() as u64) as usize;
    let module = crate::algebra::simple(algebra, v, side).expect("vertex in range");
    Draw { module, attempts: MAX_ATTEMPTS, fallback: true }
}

/// A random natural transformation `source -> target`: a random solution `(u, v)` of the
/// square equation.
pub fn random_fp_morphism(source: &FpFunctor, target: &FpFunctor, rng: &mut dyn RngCore) -> FpMorphism {
    assert_eq!(source.variance, target.variance);
    let (f, g) = (&source.presentation, &target.presentation);
    let field = f.domain().field();
    let (hu, hv) = match source.variance {
        Variance::Covariant => (hom_basis(target.x(), source.x()), hom_basis(target.y(), source.y())),
        Variance::Contravariant => (hom_basis(source.x(), target.x()), hom_basis(source.y(), target.y())),
    };
    let (hu, hv) = (hu.expect("same category"), hv.expect("same category"));
    // columns: f∘u_i (resp. u_i∘f) and -(v_j∘g) (resp. -(g∘v_j))
    let mut cols = Vec::new();
    for u in hu.basis() {
        let c = match source.variance {
            Variance::Covariant => f.compose(u),
            Variance::Contravariant => u.compose(f),
        };
        cols.push(c.expect("composable").flatten().transpose());
    }
    for v in hv.basis() {
        let c = match source.variance {
            Variance::Covariant => v.compose(g),
            Variance::Contravariant => g.compose(v),
        };
        cols.push((-&c.expect("composable").flatten()).transpose());
    }
    let rows = match source.variance {
        Variance::Covariant => ModuleMap::zero(target.x(), source.y()).flatten().cols(),
        Variance::Contravariant => ModuleMap::zero(source.y(), target.x()).flatten().cols(),
    };
    let refs: Vec<&Matrix> = cols.iter().collect();
    let system = Matrix::hstack(field, rows, &refs);
    let sols = system.kernel_basis();
    let coeffs = &random_matrix(field, 1, sols.dim(), rng) * sols.basis();
    let cu = coeffs.submatrix(0, 1, 0, hu.dim());
    let cv = coeffs.submatrix(0, 1, hu.dim(), hv.dim());
    FpMorphism::new(source, target, hu.element(&cu), hv.element(&cv)).expect("square commutes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Fixture;

    struct Counter(u64);

    impl RngCore for Counter {
        fn next_u32(&mut self) -> u32 {
            self.next_u64() as u32
        }
        fn next_u64(&mut self) -> u64 {
            // splitmix64
            self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
            let mut z = self.0;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
            z ^ (z >> 31)
        }
        fn fill_bytes(&mut self, dest: &mut [u8]) {
            rand_core::impls::fill_bytes_via_next(self, dest)
        }
    }

    #[test]
    fn random_modules_are_valid() {
        let mut rng = Counter(7);
        let f = Field::prime(5).unwrap();
        for fx in Fixture::ALL {
            let alg = fx.build(f);
            for side in [Side::Left, Side::Right] {
                for _ in 0..5 {
                    let m = random_module(&alg, side, 3, &mut rng);
                    Representation::new(m.algebra(), m.side(), m.dims().to_vec(), m.arrow_maps().to_vec()).unwrap();
                    assert!(m.dims().iter().all(|&d| d <= 3));
                }
            }
        }
    }
}
