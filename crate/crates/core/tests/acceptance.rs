//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails or overruns its time limit.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use frieze_core::frieze::{
    check_frieze, check_local_rule, check_weak_frieze, crossing_count, glue, render_pattern, restrict, Piece,
    WeakFrieze,
};
use frieze_core::gallery::{
    baur_marsh_frieze, bhj_det_formula, bm_det_formula, cell_sizes, constant_frieze, dissection_frieze,
    maldonado_check, maldonado_det_formula, overlap_identity_check, random_dissection, random_evaluation,
    random_nonzero_rational, random_weak_frieze, DissectionMode, MaldonadoMatrix,
};
use frieze_core::geometry::{
    all_dissections, all_triangulations, internal_diagonals, split_polygon, validate_dissection, Diagonal, Dissection,
};
use frieze_core::matrix::{
    det_bareiss, det_leibniz, frieze_matrix, glue_det_check, structured_reduction, SquareMatrix,
};
use frieze_core::oracle::glue_permuted;
use frieze_core::scalar::{Scalar, ScalarKind};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

const CRITERIA: [Criterion; 9] = [
    Criterion {
        id: 1,
        name: "octagon reproduction",
        limit: Duration::from_secs(1),
        run: octagon,
    },
    Criterion {
        id: 2,
        name: "gluing determinant factorization",
        limit: Duration::from_secs(30),
        run: factorization,
    },
    Criterion {
        id: 3,
        name: "dissection friezes, cell-size formula",
        limit: Duration::from_secs(60),
        run: bhj,
    },
    Criterion {
        id: 4,
        name: "Conway-Coxeter determinants",
        limit: Duration::from_secs(60),
        run: conway_coxeter,
    },
    Criterion {
        id: 5,
        name: "cluster-variable frieze, symbolic",
        limit: Duration::from_secs(120),
        run: baur_marsh,
    },
    Criterion {
        id: 6,
        name: "friezes with coefficients",
        limit: Duration::from_secs(30),
        run: maldonado,
    },
    Criterion {
        id: 7,
        name: "structured row reduction",
        limit: Duration::from_secs(30),
        run: reduction,
    },
    Criterion {
        id: 8,
        name: "oracle equivalence",
        limit: Duration::from_secs(30),
        run: oracles,
    },
    Criterion {
        id: 9,
        name: "local 2x2 rule on full friezes",
        limit: Duration::from_secs(30),
        run: local_rule,
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; too slow")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "criterion {}: {} [{}] {} ({:.2} s, limit {} s)",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.name,
            detail,
            took.as_secs_f64(),
            c.limit.as_secs()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion/criteria failed");
        ExitCode::FAILURE
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(v: i64) -> Scalar {
    Scalar::ratio(v, 1)
}

fn dg(a: usize, b: usize) -> Diagonal {
    Diagonal::new(a, b)
}

fn cc_value(n: usize) -> Scalar {
    q(-(-2i64).pow(n as u32 - 2))
}

const OCTAGON_TEXT: &str = "\
0 1 1 1 1 2 2 1 0
  0 1 1 2 4 4 2 1 0
    0 1 2 4 4 2 1 1 0
      0 1 2 2 1 1 1 1 0
        0 1 1 1 1 2 2 1 0
          0 1 1 2 4 4 2 1 0
            0 1 2 4 4 2 1 1 0
              0 1 2 2 1 1 1 1 0
";

fn octagon() -> Outcome {
    let gluing = validate_dissection(8, [dg(1, 4), dg(5, 8)]).map_err(|e| e.to_string())?;
    let pieces: Vec<Piece> = split_polygon(&gluing)
        .into_iter()
        .map(|c| Piece::new(c, constant_frieze(4, q(1)).unwrap()).unwrap())
        .collect();
    let f = glue(&gluing, &pieces).map_err(|e| e.to_string())?;
    for (d, v) in f.iter() {
        let want = Scalar::from_int(ScalarKind::Rational, 1 << crossing_count(&d, &gluing));
        ensure(*v == want, || format!("f{d} = {v}, expected {want}"))?;
    }
    let text = render_pattern(&f, 1, 8).to_string();
    ensure(text == OCTAGON_TEXT, || format!("rendered array differs:\n{text}"))?;
    Ok("all 28 values are 2^r; rows 1..8 match".into())
}

/// One weak frieze with a chosen gluing diagonal.
struct Instance {
    f: WeakFrieze,
    d: Diagonal,
}

fn instances() -> Vec<Instance> {
    (0..200u64)
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.random_range(4..=12);
            let mut diss = random_dissection(n, seed, DissectionMode::Any).unwrap();
            if diss.is_empty() {
                let all = internal_diagonals(n);
                diss = validate_dissection(n, [all[rng.random_range(0..all.len())]]).unwrap();
            }
            let ds: Vec<Diagonal> = diss.iter().copied().collect();
            let d = ds[rng.random_range(0..ds.len())];
            Instance {
                f: random_weak_frieze(&diss, seed),
                d,
            }
        })
        .collect()
}

fn factorization() -> Outcome {
    let mut leibniz = 0;
    for (k, inst) in instances().iter().enumerate() {
        let n = inst.f.n();
        ensure(check_weak_frieze(&inst.f).is_empty(), || {
            format!("instance {k} is not a weak frieze")
        })?;
        let chk = glue_det_check(&inst.f, &inst.d).map_err(|e| format!("instance {k}: {e}"))?;
        ensure(chk.pass, || {
            format!("instance {k} (n={n}, d={}): {} != {}", inst.d, chk.lhs, chk.rhs)
        })?;
        if n <= 7 {
            let m = frieze_matrix(&inst.f);
            let l = det_leibniz(m.matrix()).map_err(|e| e.to_string())?;
            ensure(l == chk.lhs, || {
                format!("instance {k}: Leibniz {l} vs Bareiss {}", chk.lhs)
            })?;
            leibniz += 1;
        }
    }
    Ok(format!(
        "200 instances exact, {leibniz} cross-checked by permutation expansion"
    ))
}

fn bhj() -> Outcome {
    let mut count = 0;
    let mut check = |d: &Dissection| -> Result<(), String> {
        let f = dissection_frieze(d);
        let want = bhj_det_formula(d.n(), &cell_sizes(d)).map_err(|e| e.to_string())?;
        let got = frieze_matrix(&f).det();
        count += 1;
        ensure(got == want, || format!("{d:?}: det {got}, formula {want}"))
    };
    for n in 3..=8 {
        for d in all_dissections(n).map_err(|e| e.to_string())? {
            check(&d)?;
        }
    }
    for n in [9, 10] {
        for seed in 0..100 {
            check(&random_dissection(n, seed, DissectionMode::Any).unwrap())?;
        }
    }
    Ok(format!(
        "{count} dissections (exhaustive to n=8, 100 samples each for n=9,10)"
    ))
}

fn conway_coxeter() -> Outcome {
    let mut count = 0;
    for n in 4..=9 {
        for t in all_triangulations(n).map_err(|e| e.to_string())? {
            let f = dissection_frieze(&t);
            for (d, v) in f.iter() {
                let r = v.as_rational().unwrap();
                ensure(r.is_integer() && *r.numer() > 0.into(), || format!("{t:?}: f{d} = {v}"))?;
            }
            let got = frieze_matrix(&f).det();
            ensure(got == cc_value(n), || format!("{t:?}: det {got}"))?;
            count += 1;
        }
    }
    ensure(count == 2 + 5 + 14 + 42 + 132 + 429, || {
        format!("{count} triangulations")
    })?;
    Ok(format!("{count} triangulations, n = 4..9"))
}

fn baur_marsh() -> Outcome {
    let mut symbolic = 0;
    for n in 3..=6 {
        for t in all_triangulations(n).map_err(|e| e.to_string())? {
            let f = baur_marsh_frieze(&t).map_err(|e| e.to_string())?;
            let got = det_bareiss(frieze_matrix(&f).matrix());
            let want = bm_det_formula(&f);
            ensure(got == want, || format!("{t:?}: {got} != {want}"))?;
            symbolic += 1;
        }
    }
    let mut evaluated = 0;
    for n in [7, 8] {
        for seed in 0..20 {
            let t = random_dissection(n, seed, DissectionMode::Triangulation).unwrap();
            let f = baur_marsh_frieze(&t).map_err(|e| e.to_string())?;
            for k in 0..50 {
                let g = random_evaluation(&f, seed * 1000 + k).ok_or("no admissible evaluation point")?;
                let got = frieze_matrix(&g).det();
                let want = bm_det_formula(&g);
                ensure(got == want, || format!("{t:?} point {k}: {got} != {want}"))?;
                evaluated += 1;
            }
        }
    }
    Ok(format!(
        "{symbolic} triangulations symbolically (n<=6), {evaluated} evaluations (n=7,8)"
    ))
}

fn maldonado() -> Outcome {
    let mut accepted = 0;
    let mut skipped = 0;
    let mut seed = 0u64;
    while accepted < 100 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(4..=9);
        let t = random_dissection(n, seed, DissectionMode::Triangulation).unwrap();
        let f = baur_marsh_frieze(&t).map_err(|e| e.to_string())?;
        let g = random_evaluation(&f, seed).ok_or("no admissible evaluation point")?;
        seed += 1;
        // an evaluated cluster variable may vanish by accident; such matrices are outside the hypotheses
        let Ok(m) = MaldonadoMatrix::from_frieze(&g) else {
            skipped += 1;
            continue;
        };
        let bad = maldonado_check(&m);
        ensure(bad.is_empty(), || {
            format!(
                "seed {}: diamond rule fails at {:?}",
                seed - 1,
                bad.iter().map(|v| (v.i, v.j)).collect::<Vec<_>>()
            )
        })?;
        let over = overlap_identity_check(&m);
        ensure(over.is_empty(), || {
            format!("seed {}: overlap identity fails at i = {}", seed - 1, over[0].i)
        })?;
        let formula = maldonado_det_formula(&m).map_err(|e| e.to_string())?;
        let det = m.matrix().det();
        ensure(formula == det, || {
            format!("seed {}: det {det}, formula {formula}", seed - 1)
        })?;
        accepted += 1;
    }
    Ok(format!("100 matrices, n in 4..9 ({skipped} skipped for a zero entry)"))
}

fn reduction() -> Outcome {
    for (k, inst) in instances().iter().enumerate() {
        let s = structured_reduction(&inst.f, &inst.d).map_err(|e| format!("instance {k}: {e}"))?;
        let n = inst.f.n();
        let r = s.r();
        for i in 0..r - 2 {
            for j in r - 2..n {
                ensure(s.reduced().get(i, j).is_zero(), || {
                    format!("instance {k}: reduced entry ({i},{j}) nonzero")
                })?;
            }
        }
        let det = frieze_matrix(&inst.f).det();
        ensure(s.reduced().det() == det, || {
            format!("instance {k}: row operations changed the determinant")
        })?;
        ensure(s.block_det() == det, || {
            format!("instance {k}: block product differs from det(M_f)")
        })?;
        let cells = split_polygon(&validate_dissection(n, [inst.d]).unwrap());
        let p = cells.iter().find(|c| c.contains_vertex(inst.d.a() + 1)).unwrap();
        let det_p = frieze_matrix(&restrict(&inst.f, p).unwrap()).det();
        ensure(s.p_det() == det_p, || {
            format!("instance {k}: det(M~')(-c^2) = {} but det(M_fP) = {det_p}", s.p_det())
        })?;
    }
    Ok("200 instances: zero blocks present, both block identities exact".into())
}

fn oracles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for k in 0..100 {
        let n = rng.random_range(1..=7);
        let mut vals = vec![vec![q(0); n]; n];
        for (i, j) in (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))) {
            let v = if rng.random_range(0..6) == 0 {
                q(0)
            } else {
                Scalar::Rational(random_nonzero_rational(&mut rng))
            };
            vals[i][j] = v.clone();
            vals[j][i] = v;
        }
        let m = SquareMatrix::from_rows(ScalarKind::Rational, vals).unwrap();
        let (b, l) = (det_bareiss(&m), det_leibniz(&m).map_err(|e| e.to_string())?);
        ensure(b == l, || format!("matrix {k}: Bareiss {b}, Leibniz {l}\n{m}"))?;
    }
    let mut gluings = 0;
    let mut seed = 0u64;
    while gluings < 20 {
        let n = 6 + (seed as usize % 7);
        let d = random_dissection(n, seed, DissectionMode::Any).unwrap();
        seed += 1;
        if d.len() < 2 {
            continue;
        }
        let f = random_weak_frieze(&d, seed);
        let pieces: Vec<Piece> = split_polygon(&d)
            .into_iter()
            .map(|c| {
                let r = restrict(&f, &c).unwrap();
                Piece::new(c, r).unwrap()
            })
            .collect();
        let fast = glue(&d, &pieces).map_err(|e| e.to_string())?;
        let mut order: Vec<Diagonal> = d.iter().copied().collect();
        order.shuffle(&mut rng);
        let slow = glue_permuted(&d, &pieces, &order).map_err(|e| e.to_string())?;
        for ((e, a), (_, b)) in fast.iter().zip(slow.iter()) {
            ensure(a == b, || {
                format!("seed {}: f{e} = {a} by glue, {b} by recursion", seed - 1)
            })?;
        }
        gluings += 1;
    }
    Ok("100 determinants, 20 multi-diagonal gluings".into())
}

fn local_rule() -> Outcome {
    let mut friezes: Vec<WeakFrieze> = Vec::new();
    for n in 4..=8 {
        friezes.extend(all_triangulations(n).unwrap().iter().map(dissection_frieze));
    }
    for seed in 0..30 {
        let n = 4 + (seed as usize % 6);
        let t = random_dissection(n, seed, DissectionMode::Triangulation).unwrap();
        let f = baur_marsh_frieze(&t).map_err(|e| e.to_string())?;
        friezes.push(random_evaluation(&f, seed).ok_or("no admissible evaluation point")?);
    }
    for (k, f) in friezes.iter().enumerate() {
        ensure(check_frieze(f).is_empty(), || {
            format!("frieze {k} is not a full frieze")
        })?;
        let w = render_pattern(f, 1, 8);
        let bad = check_local_rule(&w, f);
        ensure(bad.is_empty(), || format!("frieze {k}: {}", bad[0]))?;
    }
    Ok(format!("{} friezes, rows 1..8", friezes.len()))
}
