//! Independent oracles shared by the integration tests. Nothing here calls
//! the recurrences, recursions or closed forms under test.
#![allow(dead_code)]

use jacobi_bc::rational::{int, rat};
use jacobi_bc::rootsystems::RootKind;
use jacobi_bc::{PolyCoeffs, Rational, RootSystem};
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn binomial(n: usize, k: usize) -> Rational {
    let mut acc = int(1);
    for i in 0..k {
        acc = acc * int((n - i) as i64) / int((i + 1) as i64);
    }
    acc
}

/// `E[(1+x)^j]` for the normalised weight `(1-x)^alpha (1+x)^beta` on
/// `[-1, 1]`, from the beta integral.
fn shifted_beta_moment(j: usize, alpha: &Rational, beta: &Rational) -> Rational {
    let mut m = int(1);
    for i in 0..j {
        let i = int(i as i64);
        m = m * int(2) * (beta + int(1) + &i) / (alpha + beta + int(2) + &i);
    }
    m
}

/// `E[x^j]` for the normalised Jacobi weight.
pub fn beta_moment(j: usize, alpha: &Rational, beta: &Rational) -> Rational {
    // x^j = ((1+x) - 1)^j
    (0..=j)
        .map(|i| {
            let sign = if (j - i).is_multiple_of(2) {
                int(1)
            } else {
                int(-1)
            };
            sign * binomial(j, i) * shifted_beta_moment(i, alpha, beta)
        })
        .fold(Rational::zero(), |a, b| a + b)
}

/// `E[x^j]` for the normalised weight `exp(-x^2)`.
pub fn gaussian_moment(j: usize) -> Rational {
    if j % 2 == 1 {
        return Rational::zero();
    }
    let m = j / 2;
    let mut double_factorial = int(1);
    for odd in (1..2 * m as i64).step_by(2) {
        double_factorial *= int(odd);
    }
    double_factorial / int(1i64 << m)
}

pub fn pairing(p: &PolyCoeffs, q: &PolyCoeffs, moment: &dyn Fn(usize) -> Rational) -> Rational {
    let mut total = Rational::zero();
    for (i, a) in p.coeffs().iter().enumerate() {
        for (j, b) in q.coeffs().iter().enumerate() {
            total += a * b * moment(i + j);
        }
    }
    total
}

/// Monic orthogonal polynomials of degree `0..=n` by Gram-Schmidt on the
/// monomials.
pub fn gram_schmidt(n: usize, moment: &dyn Fn(usize) -> Rational) -> Vec<PolyCoeffs> {
    let mut basis: Vec<PolyCoeffs> = Vec::new();
    for d in 0..=n {
        let mut p = PolyCoeffs::monomial(d);
        let xd = PolyCoeffs::monomial(d);
        for q in &basis {
            let c = pairing(&xd, q, moment) / pairing(q, q, moment);
            p = p.add(&q.scale(&-c));
        }
        basis.push(p);
    }
    basis
}

pub fn eval_exact(p: &PolyCoeffs, x: &Rational) -> Rational {
    p.coeffs()
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

/// `(1/2) sum_{alpha > 0} kappa_alpha alpha`, with the positive roots
/// written out by hand.
pub fn brute_force_rho(kind: RootKind, n: usize, kappa: &[Rational]) -> Vec<Rational> {
    let mut total = vec![Rational::zero(); n];
    let mut add = |v: Vec<i64>, k: &Rational| {
        for (t, x) in total.iter_mut().zip(v) {
            *t += k * int(x);
        }
    };
    let e = |i: usize, c: i64| {
        let mut v = vec![0; n];
        v[i] = c;
        v
    };
    for i in 0..n {
        if kind == RootKind::BC {
            add(e(i, 1), &kappa[0]);
            add(e(i, 2), &kappa[1]);
        }
        for j in i + 1..n {
            let mut minus = e(i, 1);
            minus[j] = -1;
            let k = if kind == RootKind::BC {
                &kappa[2]
            } else {
                &kappa[0]
            };
            add(minus, k);
            if kind == RootKind::BC {
                let mut plus = e(i, 1);
                plus[j] = 1;
                add(plus, &kappa[2]);
            }
        }
    }
    total.into_iter().map(|t| t / int(2)).collect()
}

pub fn random_positive_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.random_range(1..=9), rng.random_range(1..=5))
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.random_range(-12..=12), rng.random_range(1..=7))
}

/// A point in the open positive chamber, at distance well above the
/// residual's chamber margin from every wall.
pub fn random_chamber_point(rng: &mut impl Rng, rs: &RootSystem) -> Vec<f64> {
    let n = rs.rank();
    let mut gaps: Vec<f64> = (0..n).map(|_| rng.random_range(0.1..0.6)).collect();
    if rs.kind() == RootKind::A {
        gaps[n - 1] = rng.random_range(-0.5..0.5);
    }
    // t_i = gaps_i + ... + gaps_{n-1}
    let mut t = vec![0.0; n];
    let mut acc = 0.0;
    for i in (0..n).rev() {
        acc += gaps[i];
        t[i] = acc;
    }
    t
}

/// `p_(1)` for `BC_1` unrolled by hand: the lower coefficient is
/// `2 k1 / (1 + k1 + 2 k2)`.
pub fn bc1_lower(k1: &Rational, k2: &Rational) -> Rational {
    int(2) * k1 / (Rational::one() + k1 + int(2) * k2)
}

pub fn bc1_value(k1: f64, k2: f64, t: f64) -> f64 {
    2.0 * t.cosh() + 2.0 * k1 / (1.0 + k1 + 2.0 * k2)
}

pub fn relative_gap(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

/// The documented CLI invocations and their golden files under
/// `tests/golden/`.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    (
        "jacobi1d",
        &["jacobi1d", "--n", "3", "--alpha", "1/2", "--beta", "-1/2"],
    ),
    ("hermite", &["hermite", "--n", "3"]),
    (
        "ho",
        &[
            "ho", "--system", "bc", "--rank", "1", "--lambda", "1", "--k1", "1", "--k2", "1/2",
        ],
    ),
    (
        "jack",
        &[
            "jack",
            "--lambda",
            "2",
            "--nvars",
            "2",
            "--k",
            "1",
            "--crosscheck",
        ],
    ),
    (
        "limits",
        &[
            "limits",
            "ratio",
            "--n",
            "2",
            "--c",
            "2",
            "--sweep",
            "100,1000,10000",
        ],
    ),
    (
        "addition",
        &["addition", "--l", "4", "--vars", "3", "--trials", "50"],
    ),
];

pub fn golden_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.out"))
}

/// Runs the installed binary and returns (exit code, stdout, stderr).
pub fn run_binary(args: &[&str]) -> (i32, Vec<u8>, Vec<u8>) {
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_jacobi-bc"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        output.stdout,
        output.stderr,
    )
}
