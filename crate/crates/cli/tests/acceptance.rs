//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use conley_cli::parse_system;
use conley_core::dynamics::{
    conley_index, count_periodic, enumerate_periodic_oracle, EnumerationCaps, VertexShiftSpec,
};
use conley_core::linalg::{char_reversed, kernel_basis, rank, reversed_char_poly};
use conley_core::spectral::{
    generalized_image, generalized_kernel, invariant_factors, is_similar, jordan_profile,
    nonnilpotent_part, EigenKind,
};
use conley_core::{BigInt, BigRational, IntPolynomial, RationalMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

const SEED: u64 = 0x5eed_c011e;
/// Wall-clock limit for each worked example.
const EXAMPLE_BUDGET: Duration = Duration::from_secs(1);
const RANDOM_MATRICES: usize = 500;
const CONJUGATIONS: usize = 200;
const GRAPHS: usize = 100;
const PLANTED_TRIALS: usize = 200;
const MAX_TRACE_POWER: usize = 10;

type Verdict = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn q(rows: &[Vec<i64>]) -> RationalMatrix {
    RationalMatrix::from_i64_rows(rows).unwrap()
}

fn zp(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

fn within_budget(start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < EXAMPLE_BUDGET, || format!("took {took:?}, budget {EXAMPLE_BUDGET:?}"))
}

fn random_matrix(rng: &mut impl Rng, n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect()
}

/// The shared random family of criteria 4, 6 and 9.
fn random_family() -> Vec<Vec<Vec<i64>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..RANDOM_MATRICES)
        .map(|_| {
            let n = rng.gen_range(1..=5);
            random_matrix(&mut rng, n)
        })
        .collect()
}

/// `U` and `U^-1` as a product of elementary integer matrices `I + c e_ij`.
fn unimodular(rng: &mut impl Rng, n: usize, steps: usize) -> (RationalMatrix, RationalMatrix) {
    let mut u = RationalMatrix::identity(n);
    let mut u_inv = RationalMatrix::identity(n);
    if n < 2 {
        return (u, u_inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let c = [-2i64, -1, 1, 2][rng.gen_range(0..4)];
        let mut e = vec![vec![0i64; n]; n];
        let mut e_inv = vec![vec![0i64; n]; n];
        for d in 0..n {
            e[d][d] = 1;
            e_inv[d][d] = 1;
        }
        e[i][j] = c;
        e_inv[i][j] = -c;
        u = u.mul(&q(&e)).unwrap();
        u_inv = q(&e_inv).mul(&u_inv).unwrap();
    }
    (u, u_inv)
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let spec = parse_system(&fixture("horseshoe.json")).map_err(|e| e.to_string())?;
    let b = &spec.basic_sets[0];
    let a = b.structure.matrix().to_rational();
    ensure(a == q(&[vec![1, -1], vec![1, -1]]) && b.index_u == 1, || format!("fixture gives A = {a:?}"))?;
    ensure(a.mul(&a).unwrap().is_zero(), || "A^2 is not zero".into())?;
    let plus = nonnilpotent_part(&a).map_err(|e| e.to_string())?;
    ensure(plus.matrix.rows() == 0 && plus.matrix.cols() == 0, || "A+ is not 0x0".into())?;
    let index = conley_index(b, spec.effective_dim()).map_err(|e| e.to_string())?;
    for k in 0..=spec.effective_dim() + 2 {
        ensure(index.degree(k).is_none(), || format!("Con_{k} is nontrivial"))?;
    }
    within_budget(start)?;
    Ok(format!("A^2 = 0, A+ is 0x0, Con_q = (0,0) for all q ({:?})", start.elapsed()))
}

fn criterion_2() -> Verdict {
    let start = Instant::now();
    let spec = parse_system(&fixture("four_handle.json")).map_err(|e| e.to_string())?;
    let b = &spec.basic_sets[0];
    let a = b.structure.matrix().to_rational();
    let expected = q(&[vec![1, 0, -1, -1], vec![0, 1, 0, 0], vec![0, 1, 0, 0], vec![0, 1, 0, 0]]);
    ensure(a == expected && b.index_u == 1, || "fixture structure matrix differs".into())?;
    let index = conley_index(b, spec.effective_dim()).map_err(|e| e.to_string())?;
    let e1 = index.degree(1).ok_or("Con_1 is trivial")?;
    ensure(index.graded.len() == 1 && e1.dim == 2, || format!("dim CH_1 = {}", e1.dim))?;
    ensure(e1.invariant_factors == vec![zp(&[1, -2, 1])], || {
        format!("invariant factors {:?}", e1.invariant_factors)
    })?;
    ensure(is_similar(&e1.chi, &q(&[vec![1, 1], vec![0, 1]])), || "chi_1 not similar to J_2(1)".into())?;
    let profile = jordan_profile(&a).map_err(|e| e.to_string())?;
    let blocks: BTreeMap<IntPolynomial, Vec<usize>> =
        profile.entries.iter().map(|c| (c.factor.clone(), c.block_sizes.clone())).collect();
    let want = BTreeMap::from([(zp(&[0, 1]), vec![1, 1]), (zp(&[-1, 1]), vec![2])]);
    ensure(blocks == want, || format!("Jordan profile {blocks:?}"))?;
    within_budget(start)?;
    Ok(format!(
        "dim CH_1 = 2, invariant factors [(t-1)^2], Jordan t:[1,1] t-1:[2] ({:?})",
        start.elapsed()
    ))
}

fn run_json(args: &[&str]) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_conley"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!("{args:?} exited {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr))
    })?;
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn criterion_3() -> Verdict {
    let start = Instant::now();
    let path = fixture("torus.json");
    let path = path.to_str().unwrap();
    let zeta = run_json(&["zeta", path, "--format", "json"])?;
    let expected = [
        ("infinity", json!({"numerator": [1], "denominator": [1, -1], "text": "(1 - t)^-1"})),
        ("lambda", json!({"numerator": [1, -1, 1], "denominator": [1], "text": "1 - t + t^2"})),
        ("p", json!({"numerator": [1], "denominator": [1, -1], "text": "(1 - t)^-1"})),
    ];
    let sets = zeta["basic_sets"].as_array().ok_or("no basic_sets in zeta report")?;
    ensure(sets.len() == 3, || format!("{} basic sets", sets.len()))?;
    for (set, (name, z)) in sets.iter().zip(&expected) {
        ensure(set["name"] == *name && set["zeta"] == *z, || format!("zeta of {name}: {}", set["zeta"]))?;
    }
    let morse = run_json(&["morse", path, "--q", "1", "--format", "json"])?;
    let m = &morse["morse"];
    ensure(m["p_of_t"]["numerator"] == json!([1]) && m["p_of_t"]["denominator"] == json!([1]), || {
        format!("P(t) = {}", m["p_of_t"]["text"])
    })?;
    ensure(m["verdict"] == json!(true), || "verdict false".into())?;
    within_budget(start)?;
    Ok(format!(
        "zetas (1-t)^-1, 1-t+t^2, (1-t)^-1; morse --q 1 gives P(t) = 1, verdict true ({:?})",
        start.elapsed()
    ))
}

fn criterion_4(family: &[Vec<Vec<i64>>]) -> Verdict {
    for rows in family {
        let a = q(rows);
        let plus = nonnilpotent_part(&a).map_err(|e| e.to_string())?;
        // A+ is rational in the canonical basis of gIm, so compare over Q.
        let full = char_reversed(&a).map_err(|e| e.to_string())?.to_rational();
        let reduced = reversed_char_poly(&plus.matrix).map_err(|e| e.to_string())?;
        ensure(full == reduced, || format!("{rows:?}: {full} vs {reduced}"))?;
    }
    Ok(format!("{} matrices, det(I - At) = det(I - A+ t) exactly", family.len()))
}

fn criterion_5() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    for _ in 0..CONJUGATIONS {
        let n = rng.gen_range(1..=5);
        let a = q(&random_matrix(&mut rng, n));
        let steps = rng.gen_range(3..=8);
        let (u, u_inv) = unimodular(&mut rng, n, steps);
        ensure(u.mul(&u_inv).unwrap() == RationalMatrix::identity(n), || "U U^-1 != I".into())?;
        let b = u.mul(&a).unwrap().mul(&u_inv).unwrap();
        let pa = nonnilpotent_part(&a).map_err(|e| e.to_string())?;
        let pb = nonnilpotent_part(&b).map_err(|e| e.to_string())?;
        let fa = invariant_factors(&pa.matrix).map_err(|e| e.to_string())?;
        let fb = invariant_factors(&pb.matrix).map_err(|e| e.to_string())?;
        ensure(fa == fb, || format!("A = {a:?}: invariant factors {fa:?} vs {fb:?}"))?;
    }
    Ok(format!("{CONJUGATIONS} conjugations, invariant factors of A+ unchanged"))
}

fn criterion_6(family: &[Vec<Vec<i64>>]) -> Verdict {
    for rows in family {
        let a = q(rows);
        let n = a.rows();
        let kn = kernel_basis(&a.pow(n as u32).unwrap());
        for k in n + 1..=2 * n {
            ensure(kernel_basis(&a.pow(k as u32).unwrap()) == kn, || {
                format!("{rows:?}: ker A^{k} != ker A^{n}")
            })?;
        }
        let gk = generalized_kernel(&a).map_err(|e| e.to_string())?;
        let gi = generalized_image(&a).map_err(|e| e.to_string())?;
        ensure(gk == kn, || format!("{rows:?}: gKer differs from ker A^n"))?;
        ensure(gk.dim() + gi.dim() == n, || format!("{rows:?}: {} + {} != {n}", gk.dim(), gi.dim()))?;
        let plus = nonnilpotent_part(&a).map_err(|e| e.to_string())?;
        ensure(plus.is_empty() || rank(&plus.matrix) == plus.dim(), || {
            format!("{rows:?}: A+ is singular")
        })?;
    }
    Ok(format!(
        "{} matrices, ker A^k = ker A^n for n <= k <= 2n, dims add to n, A+ invertible",
        family.len()
    ))
}

fn criterion_7() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let caps = EnumerationCaps::default();
    let mut pairs = 0;
    for _ in 0..GRAPHS {
        let v = rng.gen_range(1..=4);
        let g: Vec<Vec<i64>> = (0..v).map(|_| (0..v).map(|_| rng.gen_range(0..=1)).collect()).collect();
        let shift = VertexShiftSpec::unsigned(&g).map_err(|e| e.to_string())?;
        for n in 1..=6 {
            let brute = enumerate_periodic_oracle(&shift, n, caps).map_err(|e| e.to_string())?;
            let formula = count_periodic(&shift, n).map_err(|e| e.to_string())?;
            ensure(formula == BigInt::from(brute), || format!("{g:?}, n = {n}: {formula} vs {brute}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{GRAPHS} graphs, {pairs} (graph, n) pairs agree"))
}

enum Planted {
    Jordan { eigenvalue: i64, size: usize },
    /// Companion of `t^2 - t + 1` repeated `size` times with `I_2` on the
    /// block superdiagonal.
    Sixth { size: usize },
}

impl Planted {
    fn dim(&self) -> usize {
        match self {
            Planted::Jordan { size, .. } => *size,
            Planted::Sixth { size } => 2 * size,
        }
    }

    fn factor(&self) -> IntPolynomial {
        match self {
            Planted::Jordan { eigenvalue, .. } => zp(&[-eigenvalue, 1]),
            Planted::Sixth { .. } => zp(&[1, -1, 1]),
        }
    }

    fn size(&self) -> usize {
        match self {
            Planted::Jordan { size, .. } | Planted::Sixth { size } => *size,
        }
    }

    fn matrix(&self) -> RationalMatrix {
        let d = self.dim();
        let mut m = vec![vec![0i64; d]; d];
        match self {
            Planted::Jordan { eigenvalue, size } => {
                for i in 0..*size {
                    m[i][i] = *eigenvalue;
                    if i + 1 < *size {
                        m[i][i + 1] = 1;
                    }
                }
            }
            Planted::Sixth { size } => {
                for b in 0..*size {
                    let o = 2 * b;
                    m[o][o + 1] = 1;
                    m[o + 1][o] = -1;
                    m[o + 1][o + 1] = 1;
                    if b + 1 < *size {
                        m[o][o + 2] = 1;
                        m[o + 1][o + 3] = 1;
                    }
                }
            }
        }
        q(&m)
    }
}

fn criterion_8() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let mut trial = 0;
    while trial < PLANTED_TRIALS {
        let count = rng.gen_range(1..=3);
        let blocks: Vec<Planted> = (0..count)
            .map(|_| {
                let size = rng.gen_range(1..=3);
                if rng.gen_bool(0.25) {
                    Planted::Sixth { size }
                } else {
                    Planted::Jordan { eigenvalue: rng.gen_range(-2..=2), size }
                }
            })
            .collect();
        let n: usize = blocks.iter().map(Planted::dim).sum();
        if n > 8 {
            continue;
        }
        trial += 1;
        let j = RationalMatrix::from_diagonal_blocks(&blocks.iter().map(Planted::matrix).collect::<Vec<_>>());
        let steps = rng.gen_range(3..=8);
        let (u, u_inv) = unimodular(&mut rng, n, steps);
        let a = u.mul(&j).unwrap().mul(&u_inv).unwrap();
        let mut want: BTreeMap<IntPolynomial, Vec<usize>> = BTreeMap::new();
        for b in &blocks {
            want.entry(b.factor()).or_default().push(b.size());
        }
        for sizes in want.values_mut() {
            sizes.sort_unstable_by(|x, y| y.cmp(x));
        }
        let profile = jordan_profile(&a).map_err(|e| e.to_string())?;
        let got: BTreeMap<IntPolynomial, Vec<usize>> =
            profile.entries.iter().map(|c| (c.factor.clone(), c.block_sizes.clone())).collect();
        ensure(got == want, || format!("trial {trial}: planted {want:?}, recovered {got:?}"))?;
        let kinds_ok = profile.entries.iter().all(|c| match c.degree() {
            1 => c.kind == EigenKind::RationalEigenvalue,
            _ => c.kind == EigenKind::ComplexPair,
        });
        ensure(kinds_ok, || format!("trial {trial}: wrong eigenvalue kinds"))?;
    }
    Ok(format!("{PLANTED_TRIALS} planted block structures recovered exactly"))
}

fn criterion_9(family: &[Vec<Vec<i64>>]) -> Verdict {
    let mut comparisons = 0;
    for rows in family {
        let a = q(rows);
        let n = a.rows();
        let plus = nonnilpotent_part(&a).map_err(|e| e.to_string())?;
        for k in n.max(1)..=MAX_TRACE_POWER {
            let ta = a.pow(k as u32).unwrap().trace().unwrap();
            let tp = if plus.is_empty() {
                BigRational::from_integer(0.into())
            } else {
                plus.matrix.pow(k as u32).unwrap().trace().unwrap()
            };
            ensure(ta == tp, || format!("{rows:?}, k = {k}: {ta} vs {tp}"))?;
            comparisons += 1;
        }
    }
    Ok(format!("{} matrices, {comparisons} trace comparisons exact", family.len()))
}

fn main() -> ExitCode {
    let family = random_family();
    let criteria: Vec<Criterion> = vec![
        ("horseshoe example", Box::new(criterion_1)),
        ("four-handle example", Box::new(criterion_2)),
        ("torus example", Box::new(criterion_3)),
        ("det(I - At) = det(I - A+ t)", Box::new(|| criterion_4(&family))),
        ("similarity invariance of A+", Box::new(criterion_5)),
        ("kernel chain stabilization", Box::new(|| criterion_6(&family))),
        ("periodic point oracle", Box::new(criterion_7)),
        ("planted Jordan profiles", Box::new(criterion_8)),
        ("trace(A^k) = trace(A+^k)", Box::new(|| criterion_9(&family))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {} [{name}]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} [{name}]: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
