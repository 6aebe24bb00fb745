//! Seeded instance generators for sweeps and tests.

use rand::Rng;

use crate::algebra::{rat, Backend, Modulus, Scalar};
use crate::error::RepError;
use crate::rep::RepSpec;

/// Nonzero rational `p/q` with `|p| ≤ bound`, `1 ≤ q ≤ bound`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Scalar {
    let bound = bound.max(1);
    let mut p = 0;
    while p == 0 {
        p = rng.gen_range(-bound..=bound);
    }
    Scalar::Rational(rat(p, rng.gen_range(1..=bound)))
}

fn randoms<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> Vec<Scalar> {
    (0..n).map(|_| random_rational(rng, bound)).collect()
}

/// Random rational classified spec; for `d = 4, 5` the free parameters are
/// `(λ₁, λ₂, λ₃, D)` resp. `(λ₁..λ₄, γ)`.
pub fn random_spec<R: Rng + ?Sized>(d: usize, rng: &mut R, bound: i64) -> Result<RepSpec, RepError> {
    match d {
        2 | 3 => RepSpec::classified(randoms(rng, d, bound), None),
        4 | 5 => {
            let lead = randoms(rng, d - 1, bound);
            RepSpec::classified_derived(lead, random_rational(rng, bound))
        }
        _ => Err(RepError::Unsupported(format!("no classified family for d={d}"))),
    }
}

fn zeta6() -> Backend {
    Backend::Extension(Modulus::cyclotomic6())
}

/// Primitive cube root of unity `z − 1` in `Q(ζ₆)`.
fn omega(b: &Backend) -> Scalar {
    b.primitive_root_of_unity(3).expect("Q(zeta6) contains cube roots of unity")
}

fn embed_all(b: &Backend, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| b.embed(x).expect("rationals embed")).collect()
}

fn product(v: &[Scalar]) -> Scalar {
    v.iter().skip(1).fold(v[0].clone(), |acc, x| &acc * x)
}

/// Classified spec on which one randomly chosen obstruction generator
/// vanishes, solved exactly for one parameter (over `Q` where a rational
/// zero exists, otherwise over `Q(ζ₆)`).
pub fn degenerate_spec<R: Rng + ?Sized>(d: usize, rng: &mut R, bound: i64) -> Result<RepSpec, RepError> {
    match d {
        2 => {
            // λ² − λμ + μ² has no rational zeros; μ = ζ₆^{±1} λ.
            let b = zeta6();
            let l1 = b.embed(&random_rational(rng, bound))?;
            let z = b.variable("z")?;
            let root = if rng.gen_bool(0.5) { z } else { z.inv()? };
            let l2 = &l1 * &root;
            let eigs = if rng.gen_bool(0.5) { vec![l1, l2] } else { vec![l2, l1] };
            RepSpec::classified(eigs, None)
        }
        3 => {
            // λ_i² + λ_r λ_s = 0 with λ_s = −λ_i²/λ_r.
            let mut l = randoms(rng, 3, bound);
            let i = rng.gen_range(0..3);
            let others: Vec<usize> = (0..3).filter(|&k| k != i).collect();
            let (r, s) = if rng.gen_bool(0.5) { (others[0], others[1]) } else { (others[1], others[0]) };
            l[s] = (&l[i] * &l[i]).try_div(&l[r])?.neg();
            RepSpec::classified(l, None)
        }
        4 => degenerate4(rng, bound),
        5 => degenerate5(rng, bound),
        _ => Err(RepError::Unsupported(format!("no classified family for d={d}"))),
    }
}

/// d = 4 in the parameters `(λ₁, λ₂, λ₃, G = γ²)` with `λ₄ = G²/(λ₁λ₂λ₃)`
/// and `D = λ₂λ₃/G`.
fn degenerate4<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Result<RepSpec, RepError> {
    let mut l = randoms(rng, 3, bound);
    let which = rng.gen_range(0..7);
    let (b, g) = match which {
        // λ_i² + G = 0, i ≤ 3
        0..=2 => (Backend::Rational, (&l[which] * &l[which]).neg()),
        // λ₄² + G = 0: G = −k², λ₃ = k³/(λ₁λ₂) makes λ₄ = k.
        3 => {
            let k = random_rational(rng, bound);
            l[2] = k.powi(3)?.try_div(&(&l[0] * &l[1]))?;
            (Backend::Rational, (&k * &k).neg())
        }
        // G + λ_aλ₄ + λ_bλ_c = 0 forces G = ω λ_bλ_c with ω³ = 1, ω ≠ 1.
        _ => {
            let b = zeta6();
            let pair = match which {
                4 => (1, 2),
                5 => (0, 2),
                _ => (0, 1),
            };
            let l = embed_all(&b, &l);
            let w = if rng.gen_bool(0.5) { omega(&b) } else { omega(&b).inv()? };
            let g = &w * &(&l[pair.0] * &l[pair.1]);
            return finish4(&b, l, g);
        }
    };
    finish4(&b, l, g)
}

fn finish4(b: &Backend, l: Vec<Scalar>, g: Scalar) -> Result<RepSpec, RepError> {
    let l = embed_all(b, &l);
    let g = b.embed(&g)?;
    let l4 = (&g * &g).try_div(&product(&l))?;
    let dd = (&l[1] * &l[2]).try_div(&g)?;
    let mut eigs = l;
    eigs.push(l4);
    RepSpec::classified(eigs, Some(dd))
}

/// d = 5 in the parameters `(λ₁..λ₄, γ)` with `λ₅ = γ⁵/(λ₁λ₂λ₃λ₄)`.
fn degenerate5<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Result<RepSpec, RepError> {
    let mut l = randoms(rng, 4, bound);
    let g = random_rational(rng, bound);
    let g2 = &g * &g;
    let kind = rng.gen_range(0..15);
    if kind < 10 {
        // γ² + λ_iλ_j = 0, pairs in lexicographic order over 1..5.
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        let (i, j) = pairs[kind];
        if j < 4 {
            l[j] = g2.try_div(&l[i])?.neg();
        } else {
            // λ₅ = −γ²/λ_i, i.e. ∏_{m≤4} λ_m = −γ³λ_i; solve for some k ≠ i.
            let k = (0..4).find(|&k| k != i).expect("four indices");
            let rest = (0..4).filter(|&m| m != k && m != i).fold(g.backend().one(), |acc, m| &acc * &l[m]);
            l[k] = g.powi(3)?.try_div(&rest)?.neg();
        }
        return RepSpec::classified_derived(l, g);
    }
    // γ² + γλ_i + λ_i² = 0: λ_i = ωγ over Q(ζ₆).
    let b = zeta6();
    let mut l = embed_all(&b, &l);
    let g = b.embed(&g)?;
    let w = if rng.gen_bool(0.5) { omega(&b) } else { omega(&b).inv()? };
    let i = kind - 10;
    if i < 4 {
        l[i] = &w * &g;
    } else {
        // λ₅ = ωγ by solving λ₄ = γ⁴/(ω λ₁λ₂λ₃).
        l[3] = g.powi(4)?.try_div(&(&w * &product(&l[..3])))?;
    }
    RepSpec::classified_derived(l, g)
}

/// Classified spec with `δ = 1` (a `PSL(2,Z)` representation) over
/// `Q(ζ₆)`, so that cube roots of unity are available.
pub fn psl_spec<R: Rng + ?Sized>(d: usize, rng: &mut R, bound: i64) -> Result<RepSpec, RepError> {
    let b = zeta6();
    let one = b.one();
    let mut l = embed_all(&b, &randoms(rng, d.saturating_sub(1).max(1), bound));
    match d {
        // δ = −(λ₁λ₂)³
        2 => {
            let l2 = one.neg().try_div(&l[0])?;
            RepSpec::classified(vec![l[0].clone(), l2], None)
        }
        // δ = (λ₁λ₂λ₃)²
        3 => {
            let sign = if rng.gen_bool(0.5) { one.clone() } else { one.neg() };
            let l3 = sign.try_div(&(&l[0] * &l[1]))?;
            l.push(l3);
            RepSpec::classified(l, None)
        }
        // δ = −γ⁶ with γ² = λ₂λ₃/D; γ² = −1 gives D = −λ₂λ₃.
        4 => {
            let dd = (&l[1] * &l[2]).neg();
            RepSpec::classified_derived(l, dd)
        }
        // δ = γ⁶
        5 => {
            let g = if rng.gen_bool(0.5) { one } else { one.neg() };
            RepSpec::classified_derived(l, g)
        }
        _ => Err(RepError::Unsupported(format!("no classified family for d={d}"))),
    }
}

/// Two `d = 5` specs with the same eigenvalues and fifth roots `γ`, `ζ₅γ`,
/// both over `Q(ζ₅)`.
pub fn zeta5_twins(spec: &RepSpec) -> Result<(RepSpec, RepSpec), RepError> {
    if spec.dim() != 5 {
        return Err(RepError::Unsupported("fifth-root twins exist only for d=5".into()));
    }
    let b = Backend::Extension(Modulus::cyclotomic5());
    let l = embed_all(&b, spec.eigenvalues());
    let g = b.embed(spec.root_param().expect("d=5 has gamma"))?;
    let z = b.variable("z")?;
    let first = RepSpec::classified(l.clone(), Some(g.clone()))?;
    let second = RepSpec::classified(l, Some(&z * &g))?;
    Ok((first, second))
}
