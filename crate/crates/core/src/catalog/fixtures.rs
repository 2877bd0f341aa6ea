use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Quiver, Relation};
use crate::exactla::Field;

/// The small algebras every law is exercised on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fixture {
    /// `1 -> 2`.
    A2,
    /// `1 -> 2 -> 3`.
    A3,
    /// Two parallel arrows `1 => 2`.
    Kronecker,
    /// `1 -> 2 -> 4`, `1 -> 3 -> 4` with the two length-two paths identified.
    CommutativeSquare,
    /// `k[x]/(x²)`.
    DualNumbers,
    /// `k[x]/(x³)`.
    TruncatedCubic,
    /// Cyclic quiver on three vertices modulo all paths of length two.
    Nakayama3,
}

impl Fixture {
    pub const ALL: [Fixture; 7] = [
        Fixture::A2,
        Fixture::A3,
        Fixture::Kronecker,
        Fixture::CommutativeSquare,
        Fixture::DualNumbers,
        Fixture::TruncatedCubic,
        Fixture::Nakayama3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::A2 => "a2",
            Fixture::A3 => "a3",
            Fixture::Kronecker => "kronecker",
            Fixture::CommutativeSquare => "commutative-square",
            Fixture::DualNumbers => "dual-numbers",
            Fixture::TruncatedCubic => "truncated-cubic",
            Fixture::Nakayama3 => "nakayama3",
        }
    }

    pub fn from_name(name: &str) -> Option<Fixture> {
        Fixture::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn is_hereditary(self) -> bool {
        matches!(self, Fixture::A2 | Fixture::A3 | Fixture::Kronecker)
    }

    pub fn is_self_injective(self) -> bool {
        matches!(self, Fixture::DualNumbers | Fixture::TruncatedCubic | Fixture::Nakayama3)
    }

    pub fn build(self, field: Field) -> Algebra {
        let (vertices, arrows, relations): (Vec<&str>, Vec<(&str, &str, &str)>, Vec<Vec<(i64, Vec<&str>)>>) = match self {
            Fixture::A2 => (vec!["1", "2"], vec![("a", "1", "2")], vec![]),
            Fixture::A3 => (vec!["1", "2", "3"], vec![("a", "1", "2"), ("b", "2", "3")], vec![]),
            Fixture::Kronecker => (vec!["1", "2"], vec![("a", "1", "2"), ("b", "1", "2")], vec![]),
            Fixture::CommutativeSquare => (
                vec!["1", "2", "3", "4"],
                vec![("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
                vec![vec![(1, vec!["a", "b"]), (-1, vec!["c", "d"])]],
            ),
            Fixture::DualNumbers => (vec!["1"], vec![("x", "1", "1")], vec![vec![(1, vec!["x", "x"])]]),
            Fixture::TruncatedCubic => (vec!["1"], vec![("x", "1", "1")], vec![vec![(1, vec!["x", "x", "x"])]]),
            Fixture::Nakayama3 => (
                vec!["1", "2", "3"],
                vec![("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")],
                vec![vec![(1, vec!["a", "b"])], vec![(1, vec!["b", "c"])], vec![(1, vec!["c", "a"])]],
            ),
        };
        let quiver = Quiver::new(&vertices, &arrows).expect("fixture quiver");
        let relations = relations
            .iter()
            .map(|terms| {
                let named: Vec<(crate::exactla::Scalar, &[&str])> =
                    terms.iter().map(|(c, p)| (field.from_i64(*c), p.as_slice())).collect();
                Relation::from_names(&quiver, &named).expect("fixture relation")
            })
            .collect();
        Algebra::build(quiver, relations, field, 10).expect("fixture algebras are finite-dimensional")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_dimensions() {
        let f = Field::prime(5).unwrap();
        let dims: Vec<usize> = Fixture::ALL.iter().map(|x| x.build(f).dim()).collect();
        assert_eq!(dims, vec![3, 6, 4, 9, 2, 3, 6]);
        for x in Fixture::ALL {
            assert_eq!(x.build(f).is_hereditary(), x.is_hereditary(), "{}", x.name());
            assert_eq!(Fixture::from_name(x.name()), Some(x));
        }
    }
}
