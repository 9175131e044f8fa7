use proptest::prelude::*;

use frieze_core::frieze::{check_weak_frieze, glue, glue_via, render_pattern, restrict, Piece, Pivot, WeakFrieze};
use frieze_core::gallery::{random_dissection, random_weak_frieze, DissectionMode};
use frieze_core::geometry::{all_diagonals, boundary_edges, crossing, split_polygon, Dissection};
use frieze_core::matrix::{
    det_bareiss, det_leibniz, frieze_matrix, glue_det_check, structured_reduction, SquareMatrix,
};
use frieze_core::scalar::{Rational, Scalar, ScalarKind};

fn dissection() -> impl Strategy<Value = Dissection> {
    (3usize..=12, any::<u64>(), any::<bool>()).prop_map(|(n, seed, tri)| {
        let mode = if tri {
            DissectionMode::Triangulation
        } else {
            DissectionMode::Any
        };
        random_dissection(n, seed, mode).unwrap()
    })
}

fn weak_frieze() -> impl Strategy<Value = WeakFrieze> {
    (4usize..=12, any::<u64>())
        .prop_map(|(n, seed)| random_weak_frieze(&random_dissection(n, seed, DissectionMode::Any).unwrap(), seed))
}

fn pieces_of(f: &WeakFrieze) -> Vec<Piece> {
    split_polygon(f.dissection())
        .into_iter()
        .map(|c| {
            let r = restrict(f, &c).unwrap();
            Piece::new(c, r).unwrap()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn crossing_symmetry(n in 4usize..=12, k in 0usize..12) {
        let ds = all_diagonals(n);
        for d in &ds {
            prop_assert!(!crossing(d, d, n).unwrap());
            for e in &ds {
                let c = crossing(d, e, n).unwrap();
                prop_assert_eq!(c, crossing(e, d, n).unwrap());
                prop_assert_eq!(c, crossing(&d.rotate(k, n), &e.rotate(k, n), n).unwrap());
                prop_assert_eq!(c, crossing(&d.reflect(n), &e.reflect(n), n).unwrap());
            }
        }
    }

    #[test]
    fn cells_tile_the_polygon(d in dissection()) {
        let n = d.n();
        let cells = split_polygon(&d);
        prop_assert_eq!(cells.len(), d.len() + 1);
        prop_assert_eq!(cells.iter().map(|c| c.len()).sum::<usize>(), n + 2 * d.len());
        for e in boundary_edges(n) {
            prop_assert_eq!(cells.iter().filter(|c| c.sides().contains(&e)).count(), 1);
        }
        for g in d.iter() {
            prop_assert_eq!(cells.iter().filter(|c| c.sides().contains(g)).count(), 2);
        }
        for c in &cells {
            prop_assert!(c.vertices().windows(2).all(|w| w[0] < w[1]));
        }
        prop_assert!(d.len() <= n - 3);
        prop_assert_eq!(d.len() == n - 3, cells.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn glue_is_a_weak_frieze_and_restricts_back(f in weak_frieze()) {
        prop_assert!(check_weak_frieze(&f).is_empty());
        let pieces = pieces_of(&f);
        let g = glue(f.dissection(), &pieces).unwrap();
        prop_assert_eq!(&g, &f);
        for p in &pieces {
            prop_assert_eq!(&restrict(&g, &p.cell).unwrap(), &p.frieze);
        }
        prop_assert_eq!(glue_via(f.dissection(), &pieces, Pivot::Last).unwrap(), g);
    }

    #[test]
    fn gluing_commutes_with_rotation(f in weak_frieze(), k in 0usize..12) {
        let rotated = f.rotate(k);
        let g = glue(rotated.dissection(), &pieces_of(&rotated)).unwrap();
        prop_assert_eq!(g, rotated);
    }

    #[test]
    fn pattern_glide(f in weak_frieze()) {
        let n = f.n() as i64;
        let w = render_pattern(&f, -n, 2 * n);
        for (i, row) in w.rows() {
            for (k, v) in row.iter().enumerate() {
                let j = i + k as i64;
                if let Some(u) = w.entry(j, n + i) {
                    prop_assert_eq!(v, u);
                }
            }
        }
    }

    #[test]
    fn determinant_is_dihedrally_invariant(f in weak_frieze(), k in 0usize..12) {
        let det = frieze_matrix(&f).det();
        prop_assert_eq!(frieze_matrix(&f.rotate(k)).det(), det.clone());
        prop_assert_eq!(frieze_matrix(&f.reflect()).det(), det);
    }

    #[test]
    fn factorization_along_every_gluing_diagonal(f in weak_frieze()) {
        let det = frieze_matrix(&f).det();
        for d in f.dissection().iter() {
            let chk = glue_det_check(&f, d).unwrap();
            prop_assert!(chk.pass, "{}: {} vs {}", d, chk.lhs, chk.rhs);
            let s = structured_reduction(&f, d).unwrap();
            prop_assert_eq!(s.reduced().det(), det.clone());
            prop_assert_eq!(s.block_det(), det.clone());
            prop_assert_eq!(s.p_det(), chk.det_p);
        }
    }

    #[test]
    fn bareiss_matches_leibniz(n in 0usize..=7, entries in prop::collection::vec((-9i64..=9, 1i64..=5), 28)) {
        let mut m = vec![vec![Scalar::ratio(0, 1); n]; n];
        let upper = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        for ((i, j), (p, q)) in upper.zip(entries) {
            m[i][j] = Scalar::ratio(p, q);
            m[j][i] = Scalar::ratio(p, q);
        }
        let m = SquareMatrix::from_rows(ScalarKind::Rational, m).unwrap();
        prop_assert_eq!(det_bareiss(&m), det_leibniz(&m).unwrap());
    }

    #[test]
    fn symbolic_bareiss_matches_leibniz(seed in any::<u64>(), n in 3usize..=5) {
        // symbolic entries: each rational value q becomes q + u, q + v or q + w
        let d = random_dissection(n, seed, DissectionMode::Any).unwrap();
        let f = random_weak_frieze(&d, seed);
        let vars = ["u", "v", "w"];
        let g = f
            .map_values(|v| {
                let q: &Rational = v.as_rational().unwrap();
                let k = (q.numer().magnitude().to_u32_digits().first().copied().unwrap_or(0) % 3) as usize;
                Scalar::var(vars[k]) + Scalar::from_rational(ScalarKind::Symbolic, q.clone())
            })
            .unwrap();
        let m = frieze_matrix(&g);
        prop_assert_eq!(m.det(), det_leibniz(m.matrix()).unwrap());
    }
}

#[test]
fn triangle_dissection_is_empty() {
    let d = random_dissection(3, 7, DissectionMode::Any).unwrap();
    assert!(d.is_empty());
    assert_eq!(split_polygon(&d).len(), 1);
}
