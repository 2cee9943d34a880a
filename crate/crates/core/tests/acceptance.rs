//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any failed or ran past its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use numsemi::sweep::{batch_map, coprime_pairs};
use numsemi::{
    build_table, conductor_bound, divide, epsilon_symmetry_violations, euler_product_series,
    in_kernel, is_symmetric, partition_count, phi_evaluate, rank_nullity_check, reciprocal_duality,
    series_identity_check, verify_functional_equation, BivariatePolynomial, GeneratorSet,
    KernelMethod, Monomial2,
};

struct Criterion {
    id: u8,
    name: &'static str,
    budget: Duration,
    run: fn() -> Result<String, String>,
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pair_set(a: u64, b: u64) -> GeneratorSet {
    GeneratorSet::pair(a, b).expect("sweep pairs are valid")
}

/// Frobenius number and genus match `ab - a - b` and `(a-1)(b-1)/2`.
fn sharp_sylvester() -> Result<String, String> {
    let pairs = coprime_pairs(40);
    let failures: Vec<_> = batch_map(&pairs, |&(a, b)| {
        let t = build_table(&pair_set(a, b)).unwrap();
        let ok = t.frobenius() == (a * b - a - b) as i64 && t.genus() == (a - 1) * (b - 1) / 2;
        (!ok).then_some((a, b))
    })
    .into_iter()
    .flatten()
    .collect();
    check(failures.is_empty(), || format!("closed forms fail for {failures:?}"))?;
    Ok(format!("{} coprime pairs with b <= 40", pairs.len()))
}

/// The functional equation and the reversed identity hold exactly.
fn functional_equation() -> Result<String, String> {
    let pairs = coprime_pairs(40);
    let failures: Vec<_> = batch_map(&pairs, |&(a, b)| {
        let ok = verify_functional_equation(a, b).unwrap() && reciprocal_duality(a, b).unwrap();
        (!ok).then_some((a, b))
    })
    .into_iter()
    .flatten()
    .collect();
    check(failures.is_empty(), || format!("identity fails for {failures:?}"))?;
    Ok(format!("{} pairs, both identities coefficient-exact", pairs.len()))
}

/// Two-generator semigroups are symmetric; {3, 4, 5} is not.
fn symmetry() -> Result<String, String> {
    let pairs = coprime_pairs(40);
    let failures: Vec<_> = batch_map(&pairs, |&(a, b)| {
        let set = pair_set(a, b);
        let t = build_table(&set).unwrap();
        let ok = epsilon_symmetry_violations(&set).unwrap().is_empty()
            && 2 * t.genus() as i64 == t.frobenius() + 1;
        (!ok).then_some((a, b))
    })
    .into_iter()
    .flatten()
    .collect();
    check(failures.is_empty(), || format!("asymmetric pairs {failures:?}"))?;

    let set = GeneratorSet::new(&[3, 4, 5]).unwrap();
    let violations = epsilon_symmetry_violations(&set).unwrap();
    check(violations == [1], || format!("{{3,4,5}} violations {violations:?}, expected [1]"))?;
    check(!is_symmetric(&set).unwrap(), || "{3,4,5} reported symmetric".into())?;
    Ok(format!("{} pairs symmetric, {{3,4,5}} violations {violations:?}", pairs.len()))
}

fn random_coprime_pair(rng: &mut ChaCha8Rng) -> (u64, u64) {
    loop {
        let (a, b) = (rng.gen_range(1..=9u64), rng.gen_range(1..=9u64));
        if a != b && a.gcd(&b) == 1 {
            return (a, b);
        }
    }
}

fn random_poly(rng: &mut ChaCha8Rng) -> BivariatePolynomial {
    let count = rng.gen_range(1..=30);
    BivariatePolynomial::from_terms((0..count).map(|_| {
        let m = Monomial2::new(rng.gen_range(0..=12), rng.gen_range(0..=12));
        let c = BigRational::new(
            BigInt::from(rng.gen_range(-100..=100i64)),
            BigInt::from(rng.gen_range(1..=100i64)),
        );
        (m, c)
    }))
}

struct KernelInstance {
    g: BivariatePolynomial,
    multiple: BivariatePolynomial,
    a: u64,
    b: u64,
}

/// Evaluation and division agree; multiples of x^b - y^a are in the kernel;
/// polynomials with a nonzero image are not.
fn kernel_characterization() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e_4d_1c);
    let instances: Vec<KernelInstance> = (0..200)
        .map(|_| {
            let (a, b) = random_coprime_pair(&mut rng);
            let g = random_poly(&mut rng);
            let h = random_poly(&mut rng);
            let multiple = &h * &BivariatePolynomial::binomial(a as u32, b as u32);
            KernelInstance { g, multiple, a, b }
        })
        .collect();

    let results = batch_map(&instances, |inst| -> Result<(bool, bool), String> {
        let f = BivariatePolynomial::binomial(inst.a as u32, inst.b as u32);
        for target in [&inst.g, &inst.multiple] {
            let d = divide(target, &f).unwrap();
            if &(&d.quotient * &f) + &d.remainder != *target {
                return Err(format!("re-expansion mismatch for ({}, {})", inst.a, inst.b));
            }
            if d.remainder.terms().any(|(m, _)| m.x >= inst.b as u32) {
                return Err(format!("remainder not reduced for ({}, {})", inst.a, inst.b));
            }
        }
        let ev = in_kernel(&inst.g, inst.a, inst.b, KernelMethod::Evaluate).unwrap();
        let dv = in_kernel(&inst.g, inst.a, inst.b, KernelMethod::Divide).unwrap();
        if ev != dv {
            return Err(format!("methods disagree on ({}, {}): {}", inst.a, inst.b, inst.g));
        }
        let mult_ok = in_kernel(&inst.multiple, inst.a, inst.b, KernelMethod::Evaluate).unwrap()
            && in_kernel(&inst.multiple, inst.a, inst.b, KernelMethod::Divide).unwrap();
        let non_member = !phi_evaluate(&inst.g, inst.a, inst.b).is_zero();
        Ok((mult_ok, non_member && !ev))
    });

    let mut rejected = 0;
    for r in results {
        let (mult_ok, rejected_non_member) = r?;
        check(mult_ok, || "a multiple of x^b - y^a tested false".into())?;
        rejected += rejected_non_member as usize;
    }
    check(rejected >= 20, || format!("only {rejected} verified non-multiples rejected"))?;
    Ok(format!("{} instances agree, {rejected} non-multiples rejected", instances.len()))
}

/// Rank-nullity to 3ab and the series identity to ab + 10.
fn rank_nullity_and_series() -> Result<String, String> {
    let pairs = coprime_pairs(30);
    let failures: Vec<_> = batch_map(&pairs, |&(a, b)| {
        let ok = rank_nullity_check(a, b, 3 * a * b).unwrap()
            && series_identity_check(a, b, (a * b + 10) as usize).unwrap();
        (!ok).then_some((a, b))
    })
    .into_iter()
    .flatten()
    .collect();
    check(failures.is_empty(), || format!("fails for {failures:?}"))?;
    Ok(format!("{} pairs with b <= 30", pairs.len()))
}

/// 1/((1-q^a)(1-q^b)) to order 500 reproduces p_{a,b}(n).
fn euler_product() -> Result<String, String> {
    for (a, b) in [(3, 5), (2, 3), (1, 1), (4, 6)] {
        let s = euler_product_series(a, b, 500);
        for n in 0..=500u64 {
            let expected = BigInt::from(partition_count(a, b, n));
            check(s.coeff(n as usize) == &expected, || {
                format!("({a},{b}) at n={n}: series {} vs count {expected}", s.coeff(n as usize))
            })?;
        }
    }
    Ok("4 pairs to order 500".into())
}

// Marks S(A) up to `limit` one generator at a time: every reachable s spawns
// s + r * a_i for all r. No predecessor bookkeeping, no early exit.
fn naive_membership(elements: &[u64], limit: u64) -> Vec<bool> {
    let mut reach = vec![false; limit as usize + 1];
    reach[0] = true;
    for &a in elements {
        let base: Vec<u64> = (0..=limit).filter(|&s| reach[s as usize]).collect();
        for s in base {
            let mut v = s;
            while v <= limit {
                reach[v as usize] = true;
                v += a;
            }
        }
    }
    reach
}

/// F(A) stays below the conductor bound, everything past it has a witness,
/// and the table matches a naive enumeration.
fn conductor_bound_criterion() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1884);
    let mut sets = Vec::new();
    while sets.len() < 50 {
        let k = rng.gen_range(2..=4);
        let mut raw: Vec<u64> = Vec::new();
        while raw.len() < k {
            let e = rng.gen_range(1..=50u64);
            if !raw.contains(&e) {
                raw.push(e);
            }
        }
        let set = GeneratorSet::from_unsigned(&raw).unwrap();
        if set.is_admissible() {
            sets.push(set);
        }
    }

    let results = batch_map(&sets, |set| -> Result<(), String> {
        let bound = conductor_bound(set).unwrap();
        let t = build_table(set).unwrap();
        let e = set.elements();
        if t.frobenius() > bound as i64 - 1 {
            return Err(format!(
                "{e:?}: F = {} exceeds bound - 1 = {}",
                t.frobenius(),
                bound as i64 - 1
            ));
        }
        for n in bound..=bound + 3 * set.largest() {
            match t.represent(n) {
                Some(r) if r.value(set) == Some(n as u128) => {}
                other => return Err(format!("{e:?}: bad witness for {n}: {other:?}")),
            }
        }
        if naive_membership(e, t.bound()) != t.member() {
            return Err(format!("{e:?}: table differs from naive enumeration"));
        }
        Ok(())
    });
    for r in results {
        r?;
    }
    let ks: Vec<usize> = (2..=4).map(|k| sets.iter().filter(|s| s.len() == k).count()).collect();
    Ok(format!("50 sets (k=2:{}, k=3:{}, k=4:{})", ks[0], ks[1], ks[2]))
}

const CRITERIA: [Criterion; 7] = [
    Criterion {
        id: 1,
        name: "sharp-sylvester formulas",
        budget: Duration::from_secs(5),
        run: sharp_sylvester,
    },
    Criterion {
        id: 2,
        name: "functional equation",
        budget: Duration::from_secs(10),
        run: functional_equation,
    },
    Criterion { id: 3, name: "symmetry", budget: Duration::from_secs(10), run: symmetry },
    Criterion {
        id: 4,
        name: "kernel characterization",
        budget: Duration::from_secs(10),
        run: kernel_characterization,
    },
    Criterion {
        id: 5,
        name: "rank-nullity and series identity",
        budget: Duration::from_secs(10),
        run: rank_nullity_and_series,
    },
    Criterion { id: 6, name: "euler product", budget: Duration::from_secs(2), run: euler_product },
    Criterion {
        id: 7,
        name: "conductor bound",
        budget: Duration::from_secs(30),
        run: conductor_bound_criterion,
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(_) if elapsed > c.budget => ("FAIL", format!("over budget {:?}", c.budget)),
            Ok(d) => ("PASS", d),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("[{status}] criterion {}: {} ({:.2?}) {detail}", c.id, c.name, elapsed);
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
