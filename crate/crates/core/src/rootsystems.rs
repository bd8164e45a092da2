//! Root data for `BC_n` and `A_{n-1}`: positive roots, Weyl orbits,
//! dominance order, the weighted half-sum `rho`, and Laplacian eigenvalues.
//!
//! Weights are integer vectors of length `n`. Type `A` weights are stored
//! unprojected; the orthogonal projection onto `sum t_i = 0` is applied only
//! inside inner products.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{int, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootKind {
    BC,
    A,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSystem {
    kind: RootKind,
    n: usize,
}

impl RootSystem {
    pub fn new(kind: RootKind, n: usize) -> Result<Self> {
        let min = match kind {
            RootKind::BC => 1,
            RootKind::A => 2,
        };
        if n < min {
            return Err(Error::Domain(format!(
                "{kind:?} needs ambient rank at least {min}, got {n}"
            )));
        }
        Ok(Self { kind, n })
    }

    pub fn bc(n: usize) -> Result<Self> {
        Self::new(RootKind::BC, n)
    }

    pub fn a(n: usize) -> Result<Self> {
        Self::new(RootKind::A, n)
    }

    pub fn kind(&self) -> RootKind {
        self.kind
    }

    /// Length of weight vectors.
    pub fn rank(&self) -> usize {
        self.n
    }

    /// `2^n n!` for `BC_n`, `n!` for `A_{n-1}`.
    pub fn weyl_order(&self) -> u64 {
        let fact: u64 = (1..=self.n as u64).product();
        match self.kind {
            RootKind::BC => fact << self.n,
            RootKind::A => fact,
        }
    }

    /// `<u, v>`; for type `A` this is the pairing of the projections.
    pub fn inner(&self, u: &[i64], v: &[i64]) -> Rational {
        let dot: i64 = u.iter().zip(v).map(|(a, b)| a * b).sum();
        match self.kind {
            RootKind::BC => int(dot),
            RootKind::A => {
                let su: i64 = u.iter().sum();
                let sv: i64 = v.iter().sum();
                int(dot) - rat(su * sv, self.n as i64)
            }
        }
    }

    pub fn norm_sq(&self, u: &[i64]) -> Rational {
        self.inner(u, u)
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        if w.len() != self.n {
            return false;
        }
        let decreasing = w.0.windows(2).all(|p| p[0] >= p[1]);
        match self.kind {
            RootKind::BC => decreasing && w.0.last().is_none_or(|&x| x >= 0),
            RootKind::A => decreasing,
        }
    }

    pub(crate) fn check_dominant(&self, w: &Weight) -> Result<()> {
        if self.is_dominant(w) {
            Ok(())
        } else {
            Err(Error::InvalidWeight {
                weight: w.clone(),
                system: self.to_string(),
            })
        }
    }

    pub(crate) fn check_multiplicity(&self, kappa: &Multiplicity) -> Result<()> {
        if kappa.kind() == self.kind {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "multiplicity {kappa:?} does not belong to {self}"
            )))
        }
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RootKind::BC => write!(f, "BC_{}", self.n),
            RootKind::A => write!(f, "A_{}", self.n - 1),
        }
    }
}

/// Integer weight of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Self(entries)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Pads with zeros to length `n`. Fails if more than `n` entries are
    /// nonzero.
    pub fn padded(&self, n: usize) -> Result<Self> {
        let parts = self.0.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
        if parts > n {
            return Err(Error::Arity { parts, nvars: n });
        }
        let mut entries = self.0[..parts].to_vec();
        entries.resize(n, 0);
        Ok(Self(entries))
    }

    /// Drops trailing zeros.
    pub fn stripped(&self) -> Self {
        let parts = self.0.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
        Self(self.0[..parts].to_vec())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl From<Vec<i64>> for Weight {
    fn from(entries: Vec<i64>) -> Self {
        Self(entries)
    }
}

/// Weyl-invariant multiplicity function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Multiplicity {
    /// Values on `e_i`, `2e_i`, and `e_i ± e_j`.
    BC {
        k1: Rational,
        k2: Rational,
        k3: Rational,
    },
    A {
        k: Rational,
    },
}

impl Multiplicity {
    pub fn bc(k1: Rational, k2: Rational, k3: Rational) -> Self {
        Self::BC { k1, k2, k3 }
    }

    pub fn a(k: Rational) -> Self {
        Self::A { k }
    }

    pub fn zero(kind: RootKind) -> Self {
        match kind {
            RootKind::BC => Self::bc(Rational::zero(), Rational::zero(), Rational::zero()),
            RootKind::A => Self::a(Rational::zero()),
        }
    }

    pub fn kind(&self) -> RootKind {
        match self {
            Self::BC { .. } => RootKind::BC,
            Self::A { .. } => RootKind::A,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Self::BC { k1, k2, k3 } => k1.is_zero() && k2.is_zero() && k3.is_zero(),
            Self::A { k } => k.is_zero(),
        }
    }

    pub fn value(&self, class: RootClass) -> Rational {
        match (self, class) {
            (Self::BC { k1, .. }, RootClass::Short) => k1.clone(),
            (Self::BC { k2, .. }, RootClass::Long) => k2.clone(),
            (Self::BC { k3, .. }, RootClass::Middle) => k3.clone(),
            (Self::A { k }, RootClass::Simple) => k.clone(),
            _ => panic!("root class {class:?} does not match multiplicity {self:?}"),
        }
    }
}

/// Weyl orbit class of a root, selecting which multiplicity applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootClass {
    /// `e_i` (BC)
    Short,
    /// `2e_i` (BC)
    Long,
    /// `e_i ± e_j` (BC)
    Middle,
    /// `e_i - e_j` (A)
    Simple,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub vector: Vec<i64>,
    pub class: RootClass,
}

fn unit(n: usize, i: usize, scale: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = scale;
    v
}

pub fn positive_roots(rs: &RootSystem) -> Vec<Root> {
    let n = rs.n;
    let mut roots = Vec::new();
    let pair = |i: usize, j: usize, sign: i64| {
        let mut v = vec![0; n];
        v[i] = 1;
        v[j] = sign;
        v
    };
    match rs.kind {
        RootKind::BC => {
            roots.extend((0..n).map(|i| Root {
                vector: unit(n, i, 1),
                class: RootClass::Short,
            }));
            roots.extend((0..n).map(|i| Root {
                vector: unit(n, i, 2),
                class: RootClass::Long,
            }));
            for i in 0..n {
                for j in i + 1..n {
                    for sign in [-1, 1] {
                        roots.push(Root {
                            vector: pair(i, j, sign),
                            class: RootClass::Middle,
                        });
                    }
                }
            }
        }
        RootKind::A => {
            for i in 0..n {
                for j in i + 1..n {
                    roots.push(Root {
                        vector: pair(i, j, -1),
                        class: RootClass::Simple,
                    });
                }
            }
        }
    }
    roots
}

/// `rho = 1/2 sum_{alpha > 0} kappa(alpha) alpha`, in closed form.
pub fn rho(rs: &RootSystem, kappa: &Multiplicity) -> Result<Vec<Rational>> {
    rs.check_multiplicity(kappa)?;
    let n = rs.n as i64;
    Ok(match kappa {
        Multiplicity::BC { k1, k2, k3 } => (1..=n)
            .map(|i| k1 * rat(1, 2) + k2 + k3 * int(n - i))
            .collect(),
        Multiplicity::A { k } => (1..=n).map(|i| k * rat(n + 1 - 2 * i, 2)).collect(),
    })
}

/// `<lambda, lambda + 2 rho>`.
pub fn eigenvalue(lambda: &Weight, kappa: &Multiplicity, rs: &RootSystem) -> Result<Rational> {
    rs.check_dominant(lambda)?;
    Ok(eigenvalue_unchecked(lambda.entries(), &rho(rs, kappa)?, rs))
}

pub(crate) fn eigenvalue_unchecked(w: &[i64], rho: &[Rational], rs: &RootSystem) -> Rational {
    // rho already lies in the sum-zero hyperplane for type A.
    let pairing: Rational = w
        .iter()
        .zip(rho)
        .map(|(&x, r)| int(x) * r)
        .fold(Rational::zero(), |acc, t| acc + t);
    rs.norm_sq(w) + int(2) * pairing
}

fn partial_sums(w: &[i64]) -> impl Iterator<Item = i64> + '_ {
    w.iter().scan(0, |acc, &x| {
        *acc += x;
        Some(*acc)
    })
}

/// `mu <= lambda` in the dominance order induced by the positive roots.
pub fn dominance_leq(mu: &Weight, lambda: &Weight, rs: &RootSystem) -> Result<bool> {
    rs.check_dominant(mu)?;
    rs.check_dominant(lambda)?;
    Ok(dominance_leq_unchecked(
        mu.entries(),
        lambda.entries(),
        rs.kind,
    ))
}

pub(crate) fn dominance_leq_unchecked(mu: &[i64], lambda: &[i64], kind: RootKind) -> bool {
    let below = partial_sums(mu)
        .zip(partial_sums(lambda))
        .all(|(m, l)| m <= l);
    match kind {
        RootKind::BC => below,
        RootKind::A => below && mu.iter().sum::<i64>() == lambda.iter().sum::<i64>(),
    }
}

/// The unique dominant element of the Weyl orbit of `nu`.
pub fn dominant_rep(nu: &[i64], rs: &RootSystem) -> Weight {
    let mut entries: Vec<i64> = match rs.kind {
        RootKind::BC => nu.iter().map(|x| x.abs()).collect(),
        RootKind::A => nu.to_vec(),
    };
    entries.sort_unstable_by(|a, b| b.cmp(a));
    Weight(entries)
}

/// Distinct permutations of `values`, in lexicographic order.
pub fn distinct_permutations(values: &[i64]) -> Vec<Vec<i64>> {
    let mut current = values.to_vec();
    current.sort_unstable();
    let mut out = vec![current.clone()];
    loop {
        // Standard next-permutation step.
        let Some(i) = (1..current.len())
            .rev()
            .find(|&i| current[i - 1] < current[i])
        else {
            return out;
        };
        let pivot = i - 1;
        let j = (pivot + 1..current.len())
            .rev()
            .find(|&j| current[j] > current[pivot])
            .expect("a larger element exists right of the pivot");
        current.swap(pivot, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

/// The Weyl orbit of a dominant weight, each element once, sorted.
pub fn orbit(lambda: &Weight, rs: &RootSystem) -> Result<Vec<Weight>> {
    rs.check_dominant(lambda)?;
    Ok(orbit_unchecked(lambda.entries(), rs.kind))
}

pub(crate) fn orbit_unchecked(lambda: &[i64], kind: RootKind) -> Vec<Weight> {
    let perms = distinct_permutations(lambda);
    let mut out: Vec<Weight> = match kind {
        RootKind::A => perms.into_iter().map(Weight).collect(),
        RootKind::BC => perms
            .into_iter()
            .flat_map(|p| {
                let nonzero: Vec<usize> = (0..p.len()).filter(|&i| p[i] != 0).collect();
                (0u64..1 << nonzero.len()).map(move |mask| {
                    let mut v = p.clone();
                    for (bit, &i) in nonzero.iter().enumerate() {
                        if mask >> bit & 1 == 1 {
                            v[i] = -v[i];
                        }
                    }
                    Weight(v)
                })
            })
            .collect(),
    };
    out.sort();
    out
}

/// Order used for saturation sets: larger total first, then lexicographically
/// larger first. Any `mu <= nu` places `nu` before `mu`.
pub fn saturation_order(a: &Weight, b: &Weight) -> Ordering {
    b.total().cmp(&a.total()).then_with(|| b.0.cmp(&a.0))
}

/// All dominant `mu <= lambda`, listed so that every weight comes after all
/// weights above it.
pub fn saturation_set(lambda: &Weight, rs: &RootSystem) -> Result<Vec<Weight>> {
    rs.check_dominant(lambda)?;
    Ok(saturation_unchecked(lambda.entries(), rs.kind))
}

pub(crate) fn saturation_unchecked(lambda: &[i64], kind: RootKind) -> Vec<Weight> {
    let n = lambda.len();
    if n == 0 {
        return vec![Weight(Vec::new())];
    }
    let bounds: Vec<i64> = partial_sums(lambda).collect();
    let total = bounds[n - 1];
    let floor = match kind {
        RootKind::BC => 0,
        RootKind::A => lambda[n - 1],
    };

    fn dfs(prefix: &mut Vec<i64>, sum: i64, bounds: &[i64], floor: i64, out: &mut Vec<Vec<i64>>) {
        let pos = prefix.len();
        if pos == bounds.len() {
            out.push(prefix.clone());
            return;
        }
        let ceiling = prefix.last().copied().unwrap_or(i64::MAX);
        let hi = ceiling.min(bounds[pos] - sum);
        let mut value = hi;
        while value >= floor {
            prefix.push(value);
            dfs(prefix, sum + value, bounds, floor, out);
            prefix.pop();
            value -= 1;
        }
    }

    let mut found = Vec::new();
    dfs(&mut Vec::with_capacity(n), 0, &bounds, floor, &mut found);
    let mut out: Vec<Weight> = found
        .into_iter()
        .filter(|w| kind == RootKind::BC || w.iter().sum::<i64>() == total)
        .map(Weight)
        .collect();
    out.sort_by(saturation_order);
    out
}

/// A Weyl group element: a permutation followed by sign changes (sign
/// changes are only allowed for `BC`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    /// `(w v)_i = sign_i * v_{perm_i}`
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl WeylElement {
    pub fn apply_int(&self, v: &[i64]) -> Vec<i64> {
        self.perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| i64::from(s) * v[p])
            .collect()
    }

    pub fn apply_f64(&self, v: &[f64]) -> Vec<f64> {
        self.perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| f64::from(s) * v[p])
            .collect()
    }
}
