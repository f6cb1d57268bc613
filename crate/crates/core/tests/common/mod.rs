//! Independent oracles and generators shared by the integration tests and
//! the acceptance runner. Oracles work on plain `char` vectors and never
//! call into the bitset code they are checking.
#![allow(dead_code)]

use nbox::bounds::{bounds_table, greedy_kappa_upper, kappa, lower_bounds, pascal_audit, refined_upper, upper_bounds};
use nbox::constructions::{ball_family, canonical, extremal_dminus1, fragmented, m_value, mbar_value, realize_mbar};
use nbox::{BicliqueCover, Family, Symbol, TernaryString};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

pub fn all_ternary(d: usize) -> Vec<Vec<char>> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|s| {
                ['0', '1', '*'].into_iter().map(move |c| {
                    let mut t = s.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn all_binary(d: usize) -> Vec<Vec<char>> {
    all_ternary(d).into_iter().filter(|s| !s.contains(&'*')).collect()
}

pub fn oracle_distance(x: &[char], y: &[char]) -> usize {
    x.iter()
        .zip(y)
        .filter(|(a, b)| matches!((a, b), ('0', '1') | ('1', '0')))
        .count()
}

pub fn oracle_contains(x: &[char], v: &[char]) -> bool {
    x.iter().zip(v).all(|(a, b)| *a == '*' || a == b)
}

pub fn oracle_hamming(u: &[char], v: &[char]) -> usize {
    u.iter().zip(v).filter(|(a, b)| a != b).count()
}

pub fn jokers(x: &[char]) -> usize {
    x.iter().filter(|&&c| c == '*').count()
}

/// Every binary string inside the subcube of `x`.
pub fn oracle_subcube(x: &[char]) -> Vec<Vec<char>> {
    let mut out = vec![Vec::new()];
    for &c in x {
        let choices: &[char] = if c == '*' {
            &['0', '1']
        } else if c == '0' {
            &['0']
        } else {
            &['1']
        };
        out = out
            .into_iter()
            .flat_map(|s| {
                choices.iter().map(move |&c| {
                    let mut t = s.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn text(x: &[char]) -> String {
    x.iter().collect()
}

pub fn parse(x: &[char]) -> TernaryString {
    text(x).parse().unwrap()
}

/// Pairwise string identities, checked against the oracles for every pair
/// of strings of length `d`.
pub fn string_identities(d: usize) -> Check {
    let all = all_ternary(d);
    let parsed: Vec<TernaryString> = all.iter().map(|x| parse(x)).collect();
    let cubes: Vec<Vec<Vec<char>>> = all.iter().map(|x| oracle_subcube(x)).collect();
    for (a, x) in all.iter().enumerate() {
        ensure!(parsed[a].to_string() == text(x), "round trip of {}", text(x));
        ensure!(parsed[a].joker_count() == jokers(x), "joker count of {}", text(x));
        for (b, y) in all.iter().enumerate() {
            let dist = parsed[a].distance(&parsed[b]).unwrap();
            ensure!(dist == oracle_distance(x, y), "distance {} {}", text(x), text(y));
            ensure!(dist == parsed[b].distance(&parsed[a]).unwrap(), "symmetry");
            ensure!(dist <= (d - jokers(x)).min(d - jokers(y)), "distance bound");
            let bound = dist + jokers(x) + jokers(y);
            for u in &cubes[a] {
                for v in &cubes[b] {
                    ensure!(oracle_hamming(u, v) <= bound, "hamming bound {} {}", text(x), text(y));
                }
            }
            if dist >= 1 {
                ensure!(
                    cubes[a].iter().all(|u| !oracle_contains(y, u)),
                    "overlap {} {}",
                    text(x),
                    text(y)
                );
            }
            let twins = x.iter().zip(y).filter(|(p, q)| p != q).count() == 1 && dist == 1;
            ensure!(
                parsed[a].is_twin_pair(&parsed[b]) == twins,
                "twin test {} {}",
                text(x),
                text(y)
            );
            if twins {
                let u = parsed[a].twin_union(&parsed[b]).unwrap();
                ensure!(u.joker_count() == jokers(x) + 1, "union jokers");
                let mut expected: Vec<String> = cubes[a].iter().chain(&cubes[b]).map(|s| text(s)).collect();
                expected.sort();
                let ut: Vec<char> = u.to_string().chars().collect();
                let mut got: Vec<String> = oracle_subcube(&ut).iter().map(|s| text(s)).collect();
                got.sort();
                ensure!(got == expected, "union cube {} {}", text(x), text(y));
            }
        }
        for v in all_binary(d) {
            let bv: nbox::BinaryString = text(&v).parse().unwrap();
            ensure!(
                parsed[a].subcube_contains(&bv).unwrap() == oracle_contains(x, &v),
                "membership {} {}",
                text(x),
                text(&v)
            );
        }
        for i in 1..=d {
            let s = parsed[a].symbol(i).unwrap();
            if s != Symbol::Joker {
                let flipped = if s == Symbol::Zero { Symbol::One } else { Symbol::Zero };
                ensure!(
                    parsed[a].with_symbol(i, flipped).unwrap().sign() == -parsed[a].sign(),
                    "sign flip"
                );
            }
        }
    }
    Ok(())
}

/// Maximum size of a set of binary strings of length `d` with pairwise
/// hamming distance at most `s`, by plain branch and bound on `u64` masks.
pub fn oracle_kappa(s: usize, d: usize) -> usize {
    let n = 1usize << d;
    let adj: Vec<u64> = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| v != u && ((u ^ v).count_ones() as usize) <= s)
                .fold(0u64, |m, v| m | (1 << v))
        })
        .collect();
    fn grow(adj: &[u64], size: usize, p: u64, best: &mut usize) {
        if p == 0 {
            *best = (*best).max(size);
            return;
        }
        let mut p = p;
        while p != 0 {
            if size + p.count_ones() as usize <= *best {
                return;
            }
            let v = p.trailing_zeros() as usize;
            grow(adj, size + 1, p & adj[v], best);
            p &= !(1 << v);
        }
    }
    // the graph is vertex transitive, so some maximum set contains 0
    let mut best = 0;
    grow(&adj, 1, adj[0], &mut best);
    best
}

pub fn kappa_matches_oracle(dmax: usize) -> Check {
    for d in 1..=dmax {
        for s in 0..=d + 1 {
            let got: u64 = kappa(s, d);
            let want = oracle_kappa(s, d) as u64;
            ensure!(got == want, "kappa({s},{d}) = {got}, brute force {want}");
        }
    }
    Ok(())
}

/// A partition built from `*^d` by repeatedly splitting a member at one of
/// its jokers into a twin pair.
pub fn random_twin_split_partition(rng: &mut ChaCha8Rng, d: usize, splits: usize) -> Family {
    let mut members = vec![TernaryString::jokers(d)];
    for _ in 0..splits {
        let candidates: Vec<usize> = (0..members.len()).filter(|&i| members[i].joker_count() > 0).collect();
        if candidates.is_empty() {
            break;
        }
        let i = candidates[rng.gen_range(0..candidates.len())];
        let coords: Vec<usize> = (1..=d)
            .filter(|&c| members[i].symbol(c).unwrap() == Symbol::Joker)
            .collect();
        let c = coords[rng.gen_range(0..coords.len())];
        let x = members.swap_remove(i);
        members.push(x.with_symbol(c, Symbol::Zero).unwrap());
        members.push(x.with_symbol(c, Symbol::One).unwrap());
    }
    Family::new(d, members).unwrap()
}

fn oracle_volume(f: &Family) -> u128 {
    f.iter().map(|x| 1u128 << x.joker_count()).sum()
}

fn max_distance(f: &Family) -> usize {
    let m = f.members();
    let mut best = 0;
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            best = best.max(m[i].distance(&m[j]).unwrap());
        }
    }
    best
}

/// Checks on a known partition. Returns whether the at-most-2 branch ran.
pub fn partition_properties(f: &Family, label: &str) -> Result<bool, String> {
    ensure!(oracle_volume(f) == 1u128 << f.dim(), "{label}: volume");
    ensure!(f.is_partition(), "{label}: not recognised as a partition");
    let expected = if f.len() == 1 { 1 } else { 0 };
    ensure!(
        f.sgn_sum().unwrap() == expected,
        "{label}: sgn_sum {}",
        f.sgn_sum().unwrap()
    );
    if f.is_total_lamination() || f.is_lamination().is_some() {
        ensure!(f.is_partition(), "{label}: lamination without partition");
    }
    if f.len() > 1 && max_distance(f) <= 2 {
        ensure!(
            f.is_lamination().is_some(),
            "{label}: 2-neighborly partition without common support"
        );
        ensure!(
            f.is_total_lamination(),
            "{label}: 2-neighborly partition is not a total lamination"
        );
        let trace = f
            .reduce_to_trivial()
            .map_err(|e| format!("{label}: reduce failed: {e}"))?;
        ensure!(trace.len() == f.len(), "{label}: reduce trace length");
        for (step, g) in trace.iter().enumerate() {
            ensure!(g.len() == f.len() - step, "{label}: step {step} size");
            ensure!(g.is_partition(), "{label}: step {step} not a partition");
        }
        return Ok(true);
    }
    Ok(false)
}

/// Random twin-split partitions; returns how many were at most
/// 2-neighborly.
pub fn random_partition_suite(count: usize, dmax: usize, seed: u64) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut small = 0;
    for n in 0..count {
        let d = rng.gen_range(1..=dmax);
        // few splits keep distances small often enough to hit the 2-neighborly case
        let splits = if n % 2 == 0 {
            rng.gen_range(0..=d + 2)
        } else {
            rng.gen_range(0..=4 * d)
        };
        let f = random_twin_split_partition(&mut rng, d, splits);
        if partition_properties(&f, &format!("random #{n} {:?}", f.to_nbx()))? {
            small += 1;
        }
    }
    Ok(small)
}

/// Every construction the library offers for dimensions up to `dmax`, with
/// the k it is advertised for.
pub fn constructed_families(dmax: usize) -> Vec<(String, usize, Family)> {
    let mut out = Vec::new();
    for d in 1..=dmax {
        out.push((format!("canonical({d})"), 1, canonical(d).unwrap()));
        out.push((format!("cube({d})"), d, Family::full_cube(d)));
        if d >= 2 {
            out.push((format!("extremal({d})"), d - 1, extremal_dminus1(d).unwrap()));
        }
        for k in 1..d {
            out.push((format!("ball({k},{d})"), k, ball_family(k, d).unwrap()));
        }
        for k in 1..=d {
            let m = m_value::<u128>(k, d).unwrap();
            out.push((format!("fragmented({k},{d})"), k, fragmented(&m.plan).unwrap()));
            if mbar_value::<u128>(k, d).unwrap().parts.len() > 1 {
                out.push((format!("mbar({k},{d})"), k, realize_mbar(k, d).unwrap()));
            }
        }
    }
    out
}

pub fn construction_partition_suite(dmax: usize) -> Check {
    for (label, k, f) in constructed_families(dmax) {
        ensure!(f.is_neighborly(k), "{label} is not {k}-neighborly");
        if !label.starts_with("ball") {
            ensure!(f.is_partition(), "{label} is not a partition");
            ensure!(f.is_total_lamination(), "{label} is not a total lamination");
            partition_properties(&f, &label)?;
        }
    }
    Ok(())
}

pub fn bounds_grid(dmax: usize) -> Check {
    for d in 1..=dmax {
        for k in 1..=d {
            let lows = lower_bounds::<u128>(k, d).unwrap();
            let ups = upper_bounds::<u128>(k, d).unwrap();
            for lo in &lows {
                for up in &ups {
                    ensure!(
                        lo.value <= up.value,
                        "({k},{d}): {} {} > {} {}",
                        lo.method,
                        lo.value,
                        up.method,
                        up.value
                    );
                }
            }
            if k < d {
                let (g, profile) = greedy_kappa_upper::<u128>(k, d).unwrap();
                ensure!(profile.is_feasible(k, d), "({k},{d}) greedy profile infeasible");
                let r: u128 = refined_upper(k, d).unwrap();
                ensure!(g <= r, "({k},{d}) greedy {g} > refined {r}");
            }
        }
    }
    Ok(())
}

pub fn pascal_on_best_bounds(dmax: usize) -> Check {
    let table = bounds_table::<u128>(dmax, dmax);
    let findings = pascal_audit(&table).map_err(|e| e.to_string())?;
    let bad: Vec<_> = findings.iter().filter(|f| f.violated).collect();
    ensure!(bad.is_empty(), "Pascal violations: {:?}", bad);
    Ok(())
}

pub fn mbar_pascal(dmax: usize) -> Check {
    for d in 2..=dmax {
        for k in 2..=d {
            let v = |k, d| mbar_value::<u128>(k, d).unwrap().value;
            let rhs = v(k - 1, d - 1) + if k < d { v(k, d - 1) } else { 1u128 << (d - 1) };
            ensure!(v(k, d) <= rhs, "mbar({k},{d}) = {} > {rhs}", v(k, d));
        }
    }
    Ok(())
}

/// A random family of distinct strings; neighborliness is left to chance.
pub fn random_family(rng: &mut ChaCha8Rng, d: usize) -> Family {
    let size = rng.gen_range(2..=12);
    let mut members: Vec<TernaryString> = Vec::new();
    let joker_rate = rng.gen_range(0.0..0.6);
    for _ in 0..size * 4 {
        if members.len() == size {
            break;
        }
        let syms: Vec<Symbol> = (0..d)
            .map(|_| {
                if rng.gen_bool(joker_rate) {
                    Symbol::Joker
                } else if rng.gen_bool(0.5) {
                    Symbol::One
                } else {
                    Symbol::Zero
                }
            })
            .collect();
        let x = TernaryString::from_symbols(&syms);
        if !members.contains(&x) {
            members.push(x);
        }
    }
    Family::new(d, members).unwrap()
}

pub fn biclique_equivalence(count: usize, dmax: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 0..count {
        let d = rng.gen_range(1..=dmax);
        let f = random_family(&mut rng, d);
        if f.len() < 2 {
            continue;
        }
        let cover = BicliqueCover::from_family(&f);
        let mult = cover.multiplicities();
        for (i, x) in f.iter().enumerate() {
            for (j, y) in f.iter().enumerate() {
                if i != j {
                    ensure!(mult[i][j] == x.distance(y).unwrap(), "family #{n}: multiplicity");
                }
            }
        }
        for k in 1..=d {
            ensure!(
                f.is_neighborly(k) == cover.verify(k).valid,
                "family #{n} {:?}, k={k}: neighborliness and cover disagree",
                f.to_nbx()
            );
        }
    }
    Ok(())
}

pub fn biclique_round_trips(dmax: usize) -> Check {
    for (label, _, f) in constructed_families(dmax) {
        if f.len() < 2 {
            continue;
        }
        let back = BicliqueCover::from_family(&f)
            .to_family()
            .map_err(|e| format!("{label}: {e}"))?;
        ensure!(back == f, "{label}: round trip changed the family");
    }
    Ok(())
}
