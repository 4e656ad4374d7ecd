use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::field::Scalar;
use crate::monomial::MonomialOrder;
use crate::poly::Term;

use super::reduce::{make_monic, reduce_traced, s_poly, sort_terms, Divisor};

#[derive(Clone, Debug, Default)]
pub struct BuchbergerOptions {
    /// Skip pairs covered by Buchberger's chain criterion.
    pub chain_criterion: bool,
}

/// Reduced monic Gröbner basis of the term lists in `gens`, each already
/// sorted under `order`. Leading coefficients used as divisors are pushed
/// onto `trace` when it is present.
pub(crate) fn groebner_terms(
    gens: Vec<Vec<Term>>,
    order: &MonomialOrder,
    opts: &BuchbergerOptions,
    trace: &mut Option<&mut Vec<Scalar>>,
) -> Vec<Vec<Term>> {
    let mut basis: Vec<Divisor> = Vec::new();
    let mut alive: Vec<bool> = Vec::new();
    // min-heap on (degree of lcm, insertion sequence)
    let mut queue: BinaryHeap<Reverse<(u32, u64, usize, usize)>> = BinaryHeap::new();
    let mut seq = 0u64;
    let mut done: HashSet<(usize, usize)> = HashSet::new();

    let mut push = |basis: &mut Vec<Divisor>,
                    alive: &mut Vec<bool>,
                    queue: &mut BinaryHeap<Reverse<(u32, u64, usize, usize)>>,
                    t: Vec<Term>| {
        let j = basis.len();
        basis.push(Divisor::new(t));
        alive.push(true);
        for i in 0..j {
            let d = basis[i].lm().lcm(basis[j].lm()).degree();
            queue.push(Reverse((d, seq, i, j)));
            seq += 1;
        }
    };

    for g in gens {
        let g = reduce_traced(g, &basis, order, trace);
        if g.is_empty() {
            continue;
        }
        let g = make_monic(g, trace);
        push(&mut basis, &mut alive, &mut queue, g);
    }

    while let Some(Reverse((_, _, i, j))) = queue.pop() {
        done.insert((i, j));
        let (a, b) = (&basis[i], &basis[j]);
        if a.lm().is_coprime(b.lm()) {
            continue;
        }
        if opts.chain_criterion && chain_skips(&basis, &done, i, j) {
            continue;
        }
        let s = s_poly(&a.terms, &b.terms, order);
        let r = reduce_traced(s, &basis, order, trace);
        if r.is_empty() {
            continue;
        }
        let r = make_monic(r, trace);
        for (k, d) in basis.iter().enumerate() {
            if r[0].0.divides(d.lm()) {
                alive[k] = false;
            }
        }
        push(&mut basis, &mut alive, &mut queue, r);
    }

    interreduce(basis.into_iter().zip(alive).filter(|(_, a)| *a).map(|(d, _)| d.terms).collect(), order, trace)
}

/// Pair (i, j) can be skipped when some k has lm(k) | lcm(i, j) and both
/// (i, k) and (j, k) were already treated.
fn chain_skips(basis: &[Divisor], done: &HashSet<(usize, usize)>, i: usize, j: usize) -> bool {
    let l = basis[i].lm().lcm(basis[j].lm());
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    (0..basis.len()).any(|k| {
        k != i && k != j && basis[k].lm().divides(&l) && done.contains(&key(i, k)) && done.contains(&key(j, k))
    })
}

/// Minimalizes and tail-reduces a Gröbner basis; output sorted ascending
/// by leading monomial.
pub(crate) fn interreduce(
    polys: Vec<Vec<Term>>,
    order: &MonomialOrder,
    trace: &mut Option<&mut Vec<Scalar>>,
) -> Vec<Vec<Term>> {
    let mut polys: Vec<Vec<Term>> = polys.into_iter().filter(|p| !p.is_empty()).collect();
    polys.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    let mut minimal: Vec<Vec<Term>> = Vec::new();
    for p in polys {
        if minimal.iter().any(|q| q[0].0.divides(&p[0].0)) {
            continue;
        }
        minimal.push(p);
    }
    let divs: Vec<Divisor> = minimal.iter().cloned().map(Divisor::new).collect();
    let mut out = Vec::with_capacity(minimal.len());
    for (k, p) in minimal.into_iter().enumerate() {
        let others: Vec<Divisor> = divs.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, d)| d.clone()).collect();
        let head = p[0].clone();
        let tail = reduce_traced(p[1..].to_vec(), &others, order, trace);
        let mut q = vec![head];
        q.extend(tail);
        out.push(make_monic(q, trace));
    }
    out
}

/// Sorts, reduces and interreduces arbitrary generators.
pub(crate) fn groebner_from_unsorted(
    gens: Vec<Vec<Term>>,
    order: &MonomialOrder,
    opts: &BuchbergerOptions,
    trace: &mut Option<&mut Vec<Scalar>>,
) -> Vec<Vec<Term>> {
    let sorted = gens.into_iter().filter(|g| !g.is_empty()).map(|g| sort_terms(g, order)).collect();
    groebner_terms(sorted, order, opts, trace)
}
