//! The ten acceptance criteria, each checked with exact rational equality.
//! Prints one `criterion N: pass|fail` line per criterion and exits nonzero
//! if any fails.

use std::process::ExitCode;
use std::time::Instant;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weyl_dixmier::centralizer::{
    canonical_generator, iterated_ndeg, n_structure, solve_beta, twisted_product,
};
use weyl_dixmier::dixmier::{
    classify, delta_phi, delta_phi_y, delta_y, dimension_growth, global_dimension_n,
    gwa_relations, ideal_i, is_simple_n, problem5_report, type_change_check, AlphaX,
    DixmierClass, GlobalDimension, GrowthMode,
};
use weyl_dixmier::exact::{binomial, Poly, RatFunc};
use weyl_dixmier::gwa::{ad_pow, parse, phi, GradedElement, HomogeneousElement};
use weyl_dixmier::oracle::{kernel_power, oracle_ideal_adaptive, saturation_check, TruncationBox};

type Outcome = Result<(), String>;

fn hom(text: &str) -> HomogeneousElement {
    HomogeneousElement::from_element(&parse(text).unwrap()).unwrap()
}

fn p(c: &[i64]) -> Poly {
    Poly::from_i64s(c)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every `u^a` (or `u^a w`) lying inside the box must be in the kernel, and
/// the kernel must have no other vectors.
fn kernel_matches_span(u: &HomogeneousElement, extra: &[GradedElement], bx: TruncationBox) -> Outcome {
    ensure(saturation_check(u, 0, bx), || format!("box {bx} not saturated for {u}"))?;
    let kernel = kernel_power(u, 0, bx);
    let ue = u.to_element();
    let mut expected = 0;
    for base in std::iter::once(GradedElement::one()).chain(extra.iter().cloned()) {
        let mut w = base;
        loop {
            let j = w.homogeneous_grading().unwrap();
            let deg = w.max_v_degree().unwrap() as u64;
            if j.unsigned_abs() > bx.grading || deg > bx.hdegree {
                break;
            }
            ensure(kernel.contains(&w), || format!("{w} missing from kernel of {u}"))?;
            expected += 1;
            w = &w * &ue;
        }
    }
    ensure(kernel.dimension() == expected, || {
        format!("kernel of {u} has dimension {} in box {bx}, expected {expected}", kernel.dimension())
    })
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for (text, d) in [("H*X", 1u64), ("H^2*X", 2)] {
        let u = hom(text);
        let closed: Vec<u64> = (1..=10).map(|k| ideal_i(&u, k).unwrap().exponent).collect();
        let expected: Vec<u64> = (1..=10u64).map(|k| k - k / (d + 1)).collect();
        ensure(closed == expected, || format!("{text}: closed forms {closed:?}"))?;
        for k in 1..=6u64 {
            let a = oracle_ideal_adaptive(&u, k, TruncationBox::new(k, 2 * k), 12).unwrap();
            ensure(a.saturated, || format!("{text}: I_{k} not saturated at {}", a.bx))?;
            ensure(a.exponent == Some(closed[k as usize - 1]), || {
                format!("{text}: I_{k} oracle {:?} vs {}", a.exponent, closed[k as usize - 1])
            })?;
        }
        let report = problem5_report(&u, 2).unwrap();
        ensure(report.negative_answer(), || format!("{text}: I_1 I_(i(d+1)-1) = I_(i(d+1))"))?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 60.0, || format!("took {secs:.1}s"))
}

fn criterion_2() -> Outcome {
    for d in 1..=4u64 {
        let u = HomogeneousElement::new(Poly::h_pow(d as usize), 1).unwrap();
        kernel_matches_span(&u, &[], TruncationBox::new(4, 4 * d + 2))?;
        let nd = iterated_ndeg(&GradedElement::y(), &u.to_element(), 64).unwrap();
        ensure(nd == d + 1, || format!("ndeg Y = {nd} for d = {d}"))?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    for text in ["H*X", "H^2*X"] {
        let s = AlphaX::new(&hom(text)).unwrap();
        let mut ids = Vec::new();
        ids.extend((0..=4).map(|i| delta_phi(&s, i)));
        ids.extend((1..=2).map(|i| delta_y(&s, i)));
        for i in 0..=2 {
            for j in 0..=2 {
                if i + (s.d() + 1) * j <= 6 {
                    ids.push(delta_phi_y(&s, i, j));
                }
            }
        }
        for id in ids {
            ensure(id.holds(), || format!("{text}: {} fails", id.label))?;
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    for text in ["X^2", "H*X", "H*(H-1)*X^2", "H*(H-3)*X^2", "Y", "Y^2"] {
        let u = hom(text);
        let g = canonical_generator(&u).unwrap();
        let alpha = RatFunc::from_poly(u.b_coefficient());
        ensure(twisted_product(&g.beta, g.t, g.m) == alpha, || format!("{text}: product != alpha"))?;
        let ue = u.to_element();
        ensure(g.v().pow(g.m as u32) == ue, || format!("{text}: v^m != u"))?;
        let lhs = alpha.shift(g.t).div(&alpha).unwrap();
        let rhs = g.beta.shift(u.grading()).div(&g.beta).unwrap();
        ensure(lhs == rhs, || format!("{text}: commutation witness fails"))?;
        ensure(&ue * &g.v() == &g.v() * &ue, || format!("{text}: v does not commute"))?;
        ensure(solve_beta(&alpha, g.t, g.m) == Some(g.beta.clone()), || {
            format!("{text}: re-solve differs")
        })?;
        let bent = &g.beta * &RatFunc::from_poly(p(&[1, 1]));
        ensure(twisted_product(&bent, g.t, g.m) != alpha, || format!("{text}: not unique"))?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let u = hom("H*(H-3)*X^2");
    let ns = n_structure(&u).unwrap();
    ensure(ns.mu_list == vec![0, 3], || format!("mu list {:?}", ns.mu_list))?;
    let v3 = ns.v_power(3);
    let expected = GradedElement::v_term(p(&[0, 8, -6, 1]), 3);
    ensure(v3 == expected, || format!("v^3 = {v3}"))?;
    ensure(v3.is_in(weyl_dixmier::gwa::Ring::A1), || "v^3 not in A1".into())?;
    ensure(ns.g_list == vec![p(&[-1, 1]), Poly::one()], || format!("g = {:?}", ns.g_list))?;
    ensure(ns.f(1).is_one(), || format!("f_1 = {}", ns.f(1)))?;
    kernel_matches_span(&u, &[v3], TruncationBox::new(7, 8))?;
    let ue = u.to_element();
    for b in ns.principal_basis(TruncationBox::new(4, 2)) {
        let got = iterated_ndeg(&b.element, &ue, 64).unwrap();
        ensure(got == b.predicted_ndeg, || {
            format!("ndeg {} = {got}, predicted {}", b.element, b.predicted_ndeg)
        })?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    use DixmierClass::*;
    for (text, class) in [
        ("X", Delta1),
        ("Y", Delta1),
        ("H*X", Delta2),
        ("H*(H-3)*X^2", Delta2),
        ("H", Delta3),
        ("H^2", Delta5),
        ("H^3", Delta5),
    ] {
        let got = classify(&hom(text)).unwrap();
        ensure(got == class, || format!("{text}: {got} instead of {class}"))?;
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    for (text, simple, gl) in [
        ("H*X", false, GlobalDimension::Two),
        ("(H - 1/2)*X", true, GlobalDimension::One),
        ("H^2*X", false, GlobalDimension::Infinite),
    ] {
        let u = hom(text);
        ensure(is_simple_n(&u).unwrap() == simple, || format!("{text}: simplicity"))?;
        let got = global_dimension_n(&u).unwrap();
        ensure(got == gl, || format!("{text}: gl.dim {}", got.tag()))?;
        for id in gwa_relations(&u).unwrap() {
            ensure(id.holds(), || format!("{text}: {} fails", id.label))?;
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    use DixmierClass::*;
    let alphas = [p(&[5]), p(&[0, 1]), p(&[1, 0, 1])];
    for (text, before) in [("X", Delta1), ("H*X", Delta2)] {
        for alpha in &alphas {
            let after = match before {
                Delta1 if alpha.degree() == Some(0) => Delta1,
                _ => Delta2,
            };
            let got = type_change_check(&hom(text), alpha).unwrap();
            ensure(got == (before, after), || format!("p = {text}, alpha = {alpha}: {got:?}"))?;
        }
    }
    Ok(())
}

fn random_element(rng: &mut ChaCha8Rng) -> GradedElement {
    let mut pick = |lo: i64, hi: i64| lo + (rng.next_u64() % (hi - lo + 1) as u64) as i64;
    let terms = pick(1, 2);
    let mut out = Vec::new();
    for _ in 0..terms {
        let j = pick(-2, 2);
        let deg = pick(0, 2) as usize;
        let c: Vec<i64> = (0..=deg).map(|_| pick(-3, 3)).collect();
        out.push((j, p(&c)));
    }
    GradedElement::from_v_terms(out)
}

fn criterion_9() -> Outcome {
    for n in 1..=50u64 {
        ensure(&phi(n).shift(1) - &phi(n) == phi(n - 1), || format!("phi recurrence at {n}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for trial in 0..100 {
        let u = random_element(&mut rng);
        let a = random_element(&mut rng);
        let b = random_element(&mut rng);
        let n = (trial % 6) as usize;
        let lhs = ad_pow(&u, &(&a * &b), n);
        let mut rhs = GradedElement::zero();
        for k in 0..=n {
            let term = &ad_pow(&u, &a, k) * &ad_pow(&u, &b, n - k);
            rhs = &rhs + &term.scale(&binomial(n as u64, k as u64));
        }
        ensure(lhs == rhs, || format!("Leibniz fails for u = {u}, a = {a}, b = {b}, n = {n}"))?;
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let dims = dimension_growth(&hom("H*X"), GrowthMode::AlphaX, 20).unwrap();
    for n in 1..=20u64 {
        let sum: u64 = dims[..n as usize].iter().sum();
        ensure(sum == n * (n + 1) / 2, || format!("HX: partial sum {sum} at n = {n}"))?;
    }
    let u = hom("H*(H-3)*X^2");
    let ns = n_structure(&u).unwrap();
    let (mu, dg) = (ns.mu, ns.gamma_degree());
    ensure(mu == 3 && dg == 1, || format!("mu = {mu}, deg gamma = {dg}"))?;
    let dims = dimension_growth(&u, GrowthMode::Centralizer, 20).unwrap();
    let mut sum = 0;
    for (i, d) in (1..=20u64).zip(&dims) {
        sum += d;
        ensure(*d == i * mu * dg, || format!("dim M_{i} = {d}"))?;
        ensure(sum == mu * dg * i * (i + 1) / 2, || format!("partial sum {sum} at {i}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = 0;
    for (n, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("criterion {n}: pass ({:.2}s)", start.elapsed().as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {n}: fail: {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
