//! The 27 lines on a smooth cubic surface, its 45 tritangent planes, and
//! the monomial ideal used to count the Hilbert function of the quadrics
//! apolar to the Cayley cubic.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grobner::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial, MonomialOrder};

pub const LINES: usize = 27;

/// Index of `c_ij` (0-based `i < j`) among the 15 pairs.
fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    i * 5 - i * i.saturating_sub(1) / 2 + (j - i - 1)
}

pub fn a(i: usize) -> usize {
    i
}

pub fn b(i: usize) -> usize {
    6 + i
}

pub fn c(i: usize, j: usize) -> usize {
    12 + pair_index(i, j)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinesIncidence {
    pub lines: Vec<String>,
    /// Each plane as three line indices, ascending.
    pub planes: Vec<[usize; 3]>,
}

/// The standard labelling: `a1..a6`, `b1..b6`, then `c12, c13, ..., c56`.
pub fn line_labels() -> Vec<String> {
    let mut v: Vec<String> = (1..=6).map(|i| format!("a{i}")).collect();
    v.extend((1..=6).map(|i| format!("b{i}")));
    for i in 1..=6 {
        for j in i + 1..=6 {
            v.push(format!("c{i}{j}"));
        }
    }
    v
}

fn perfect_matchings(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for (k, &partner) in rest.iter().enumerate() {
        let remaining: Vec<usize> = rest.iter().enumerate().filter(|&(p, _)| p != k).map(|(_, &v)| v).collect();
        for mut m in perfect_matchings(&remaining) {
            m.insert(0, (first, partner));
            out.push(m);
        }
    }
    out
}

fn sorted3(x: usize, y: usize, z: usize) -> [usize; 3] {
    let mut p = [x, y, z];
    p.sort_unstable();
    p
}

pub fn lines27() -> LinesIncidence {
    let mut planes = Vec::with_capacity(45);
    for i in 0..6 {
        for j in i + 1..6 {
            planes.push(sorted3(a(i), b(j), c(i, j)));
            planes.push(sorted3(a(j), b(i), c(i, j)));
        }
    }
    for m in perfect_matchings(&[0, 1, 2, 3, 4, 5]) {
        planes.push(sorted3(c(m[0].0, m[0].1), c(m[1].0, m[1].1), c(m[2].0, m[2].1)));
    }
    LinesIncidence { lines: line_labels(), planes }
}

impl LinesIncidence {
    pub fn without_plane(&self, k: usize) -> Self {
        let mut planes = self.planes.clone();
        planes.remove(k);
        LinesIncidence { lines: self.lines.clone(), planes }
    }

    pub fn planes_through(&self, line: usize) -> Vec<usize> {
        (0..self.planes.len()).filter(|&p| self.planes[p].contains(&line)).collect()
    }

    /// The plane containing both lines, if any.
    pub fn common_plane(&self, l1: usize, l2: usize) -> Option<usize> {
        (0..self.planes.len()).find(|&p| self.planes[p].contains(&l1) && self.planes[p].contains(&l2))
    }

    fn coplanarity(&self) -> Vec<Vec<Option<usize>>> {
        let n = self.lines.len();
        let mut t = vec![vec![None; n]; n];
        for (k, p) in self.planes.iter().enumerate() {
            for &x in p {
                for &y in p {
                    if x != y {
                        t[x][y] = Some(k);
                    }
                }
            }
        }
        t
    }

    /// A pair of lines in `set` lying in no common plane.
    pub fn non_coplanar_pair(&self, set: &[usize]) -> Option<(usize, usize)> {
        let t = self.coplanarity();
        set.iter()
            .enumerate()
            .flat_map(|(k, &x)| set[k + 1..].iter().map(move |&y| (x, y)))
            .find(|&(x, y)| t[x][y].is_none())
    }

    pub fn label(&self, line: usize) -> &str {
        &self.lines[line]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        let label = normalize_label(label);
        self.lines.iter().position(|l| *l == label)
    }

    pub fn plane_label(&self, p: usize) -> String {
        self.planes[p].iter().map(|&l| self.lines[l].as_str()).collect::<Vec<_>>().join("")
    }
}

/// `c_ji` is the same line as `c_ij`.
pub fn normalize_label(label: &str) -> String {
    let b = label.as_bytes();
    if b.len() == 3 && b[0] == b'c' && b[1] > b[2] {
        format!("c{}{}", b[2] as char, b[1] as char)
    } else {
        label.to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub four_subsets_checked: u64,
    pub part_i: bool,
    pub triples_checked: u64,
    pub part_ii: bool,
    pub line_plane_pairs_checked: u64,
    pub part_iii: bool,
    /// First failure of part (iii), as (line, plane).
    pub part_iii_failure: Option<(String, String)>,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.part_i && self.part_ii && self.part_iii
    }
}

/// Exhaustive check of the three incidence properties: every 4 lines
/// contain a non-coplanar pair; pairwise coplanar triples span one plane;
/// for a line and a plane avoiding it, some plane through the line meets
/// the other plane in a line.
pub fn verify_lemma_27lines(l: &LinesIncidence) -> LemmaReport {
    let n = l.lines.len();
    let t = l.coplanarity();
    let mut four = 0u64;
    let mut part_i = true;
    for w in 0..n {
        for x in w + 1..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    four += 1;
                    let q = [w, x, y, z];
                    let ok = (0..4).any(|i| (i + 1..4).any(|j| t[q[i]][q[j]].is_none()));
                    part_i &= ok;
                }
            }
        }
    }
    let mut triples = 0u64;
    let mut part_ii = true;
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                if let (Some(p), Some(q), Some(r)) = (t[x][y], t[x][z], t[y][z]) {
                    triples += 1;
                    part_ii &= p == q && q == r && l.planes[p] == [x, y, z];
                }
            }
        }
    }
    let mut pairs = 0u64;
    let mut failure = None;
    for line in 0..n {
        let through = l.planes_through(line);
        for (rk, rho) in l.planes.iter().enumerate() {
            if rho.contains(&line) {
                continue;
            }
            pairs += 1;
            let found = through.iter().any(|&s| l.planes[s].iter().filter(|m| rho.contains(m)).count() == 1);
            if !found && failure.is_none() {
                failure = Some((l.lines[line].clone(), l.plane_label(rk)));
            }
        }
    }
    LemmaReport {
        four_subsets_checked: four,
        part_i,
        triples_checked: triples,
        part_ii,
        line_plane_pairs_checked: pairs,
        part_iii: failure.is_none(),
        part_iii_failure: failure,
    }
}

fn mono(pairs: &[usize]) -> Monomial {
    let mut e = vec![0u16; LINES];
    for &p in pairs {
        e[p] += 1;
    }
    Monomial::from_slice(&e)
}

/// The 243 quadratic monomials: squares, `a_i b_i`, `a_i a_j`, `b_i b_j`,
/// `a_i c_jk`, `b_i c_jk` and `c_ij c_ik` with distinct indices.
pub fn cayley_monomials() -> Vec<Monomial> {
    let mut out: Vec<Monomial> = (0..LINES).map(|l| mono(&[l, l])).collect();
    for i in 0..6 {
        out.push(mono(&[a(i), b(i)]));
    }
    for i in 0..6 {
        for j in i + 1..6 {
            out.push(mono(&[a(i), a(j)]));
            out.push(mono(&[b(i), b(j)]));
        }
    }
    for i in 0..6 {
        for j in 0..6 {
            for k in j + 1..6 {
                if i != j && i != k {
                    out.push(mono(&[a(i), c(j, k)]));
                    out.push(mono(&[b(i), c(j, k)]));
                    out.push(mono(&[c(i, j), c(i, k)]));
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyReport {
    pub ranking: Vec<String>,
    pub quadratic_monomials_in_j: usize,
    pub hilbert: Vec<u64>,
    pub lowest_plane: String,
    pub standard_cubics: Vec<String>,
    pub claim_a: bool,
    pub claim_b: bool,
    pub claim_c: bool,
}

impl CayleyReport {
    pub fn holds(&self) -> bool {
        self.claim_a && self.claim_b && self.claim_c && self.hilbert == [1, 27, 27, 1]
    }
}

/// Builds the leading-monomial ideal `J` for the revlex order with the
/// lines ranked by `ranking` (largest first) and checks claims A, B, C.
pub fn cayley_monomial_ideal(l: &LinesIncidence, ranking: &[usize]) -> Result<(MonomialIdeal, CayleyReport)> {
    let order = MonomialOrder::revlex(ranking.to_vec())?;
    if order.arity() != LINES || l.lines.len() != LINES {
        return Err(Error::InvalidOrder(format!("expected a ranking of all {LINES} lines")));
    }
    let plane_mono: Vec<Monomial> = l.planes.iter().map(|p| mono(p)).collect();
    let mut gens = cayley_monomials();
    for line in 0..LINES {
        let through = l.planes_through(line);
        let Some(&lowest) = through.iter().min_by(|&&p, &&q| order.cmp(&plane_mono[p], &plane_mono[q])) else {
            continue;
        };
        for &p in &through {
            if p != lowest {
                let others: Vec<usize> = l.planes[p].iter().copied().filter(|&m| m != line).collect();
                gens.push(mono(&others));
            }
        }
    }
    let j = MonomialIdeal::new(LINES, gens);
    let levels = j.standard_monomials(4);
    let hilbert: Vec<u64> = levels.iter().map(|v| v.len() as u64).collect();
    let in_j_deg2 = monomials_of_degree(LINES, 2).len() - levels[2].len();
    let lowest = (0..l.planes.len()).min_by(|&p, &q| order.cmp(&plane_mono[p], &plane_mono[q])).expect("planes exist");
    let cubics = levels.get(3).cloned().unwrap_or_default();
    let names = &l.lines;
    let report = CayleyReport {
        ranking: ranking.iter().map(|&v| names[v].clone()).collect(),
        quadratic_monomials_in_j: in_j_deg2,
        lowest_plane: l.plane_label(lowest),
        standard_cubics: cubics.iter().map(|m| m.fmt_with(names)).collect(),
        claim_a: levels.get(4).is_none_or(|v| v.is_empty()),
        claim_b: in_j_deg2 >= 351,
        claim_c: cubics == [plane_mono[lowest].clone()],
        hilbert: {
            let mut h = hilbert;
            while h.last() == Some(&0) {
                h.pop();
            }
            h
        },
    };
    Ok((j, report))
}

/// Map from a line label to its index, with `c_ji` aliased to `c_ij`.
pub fn label_map(l: &LinesIncidence) -> HashMap<String, usize> {
    let mut m: HashMap<String, usize> = l.lines.iter().enumerate().map(|(k, s)| (s.clone(), k)).collect();
    for i in 1..=6 {
        for j in i + 1..=6 {
            if let Some(&k) = m.get(&format!("c{i}{j}")) {
                m.insert(format!("c{j}{i}"), k);
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn counts() {
        let l = lines27();
        assert_eq!(l.lines.len(), 27);
        assert_eq!(l.planes.len(), 45);
        for line in 0..27 {
            assert_eq!(l.planes_through(line).len(), 5);
        }
        assert_eq!(cayley_monomials().len(), 243);
        let mut all = cayley_monomials();
        all.sort_by(crate::monomial::grevlex_cmp);
        all.dedup();
        assert_eq!(all.len(), 243);
    }

    #[test]
    fn lemma_holds() {
        let r = verify_lemma_27lines(&lines27());
        assert!(r.holds());
        assert_eq!(r.four_subsets_checked, 17_550);
        assert_eq!(r.line_plane_pairs_checked, 27 * 40);
        assert_eq!(r.triples_checked, 45);
    }

    #[test]
    fn deleting_a_plane_breaks_part_iii() {
        let r = verify_lemma_27lines(&lines27().without_plane(0));
        assert!(!r.part_iii);
        assert!(r.part_iii_failure.is_some());
    }

    #[test]
    fn four_set_witness() {
        let l = lines27();
        let set: Vec<usize> = ["a1", "a2", "c34", "b5"].iter().map(|s| l.index_of(s).unwrap()).collect();
        let (x, y) = l.non_coplanar_pair(&set).unwrap();
        assert!(l.common_plane(x, y).is_none());
        assert_eq!(l.index_of("c43"), l.index_of("c34"));
    }

    #[test]
    fn cayley_claims_for_random_orders() {
        let l = lines27();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let mut r: Vec<usize> = (0..27).collect();
            r.shuffle(&mut rng);
            let (_, rep) = cayley_monomial_ideal(&l, &r).unwrap();
            assert!(rep.holds(), "{rep:?}");
            assert_eq!(rep.quadratic_monomials_in_j, 351);
        }
        assert!(cayley_monomial_ideal(&l, &[0, 1, 2]).is_err());
    }
}
