//! Constructors for the example families and the combinatorics of the 27
//! lines, with a name-based lookup used by the command line.

mod families;
mod lines;
mod matrices;

pub use families::*;
pub use lines::*;
pub use matrices::*;

use crate::apolarity::{apolar_ideal, InverseSystemModule};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::IdealPresentation;
use crate::poly::Polynomial;

/// What a gallery name resolves to.
#[derive(Clone, Debug)]
pub enum GalleryItem {
    /// An ideal, with the generators proposed as its universal Gröbner basis
    /// when the gallery knows one.
    Ideal { ideal: IdealPresentation, candidate: Option<Vec<Polynomial>> },
    Module(InverseSystemModule),
    Lines(LinesIncidence),
}

pub const GALLERY_NAMES: &[&str] = &[
    "remark",
    "minors:gen:MxN[:zeros=i-j,...]",
    "minors:sym:N[:zeros=i-j,...]",
    "minors:hankel:MxN",
    "pfaffians:N:SIZE",
    "apolar:minors:MxN",
    "apolar:perm:MxN",
    "apolar:pf:N",
    "apolar:symdet:N",
    "forms:minors:MxN",
    "forms:pf:N",
    "forms:symdet:N",
    "clebsch",
    "clebsch-form",
    "cycle:N",
    "cycle-form:N",
    "cayley",
    "lines27",
];

fn usage(name: &str) -> Error {
    Error::Invalid(format!("unknown gallery name `{name}`; known: {}", GALLERY_NAMES.join(", ")))
}

fn num(s: &str, name: &str) -> Result<usize> {
    s.parse().map_err(|_| usage(name))
}

fn dims(s: &str, name: &str) -> Result<(usize, usize)> {
    let (a, b) = s.split_once('x').ok_or_else(|| usage(name))?;
    Ok((num(a, name)?, num(b, name)?))
}

/// Parses `zeros=1-1,2-3` (1-based) into 0-based positions.
fn zeros(parts: &[&str], name: &str) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for p in parts {
        let list = p.strip_prefix("zeros=").ok_or_else(|| usage(name))?;
        for item in list.split(',').filter(|s| !s.is_empty()) {
            let (i, j) = item.split_once('-').ok_or_else(|| usage(name))?;
            let (i, j) = (num(i, name)?, num(j, name)?);
            if i == 0 || j == 0 {
                return Err(Error::Invalid("zero positions are 1-based".into()));
            }
            out.push((i - 1, j - 1));
        }
    }
    Ok(out)
}

fn ideal_of(polys: Vec<Polynomial>, candidate: bool) -> Result<GalleryItem> {
    let ring = polys.first().ok_or_else(|| Error::Invalid("empty generator list".into()))?.ring().clone();
    let ideal = IdealPresentation::new(&ring, polys.clone())?;
    Ok(GalleryItem::Ideal { ideal, candidate: candidate.then_some(polys) })
}

/// Resolves a gallery name such as `minors:sym:3` or `cycle:5`.
pub fn lookup(name: &str, field: Field) -> Result<GalleryItem> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["remark"] => {
            let i = remark_ideal(field)?;
            Ok(GalleryItem::Ideal { candidate: Some(i.gens().to_vec()), ideal: i })
        }
        ["minors", kind, size, rest @ ..] => {
            let shape = match *kind {
                "gen" => {
                    let (m, n) = dims(size, name)?;
                    MatrixShape::generic(m, n).with_zeros(zeros(rest, name)?)?
                }
                "sym" => MatrixShape::symmetric(num(size, name)?).with_zeros(zeros(rest, name)?)?,
                "hankel" if rest.is_empty() => {
                    let (m, n) = dims(size, name)?;
                    MatrixShape::hankel(m, n)
                }
                _ => return Err(usage(name)),
            };
            let ideal = minors2(&shape, field)?;
            Ok(GalleryItem::Ideal { candidate: Some(ideal.gens().to_vec()), ideal })
        }
        ["pfaffians", n, size] => ideal_of(pfaffians(num(n, name)?, num(size, name)?, field)?, true),
        ["apolar", "minors", size] => {
            let (m, n) = dims(size, name)?;
            ideal_of(minors_apolar_gens(m, n, field)?, true)
        }
        ["apolar", "perm", size] => {
            let (m, n) = dims(size, name)?;
            ideal_of(permanent_apolar_gens(m, n, field)?, true)
        }
        ["apolar", "pf", n] => ideal_of(pfaffian_apolar_gens(num(n, name)?, field)?, true),
        ["apolar", "symdet", n] => {
            let ideal = apolar_ideal(&symmetric_determinant_module(num(n, name)?, field)?)?;
            Ok(GalleryItem::Ideal { ideal, candidate: None })
        }
        ["forms", "minors", size] => {
            let (m, n) = dims(size, name)?;
            Ok(GalleryItem::Module(maximal_minors_module(m, n, field)?))
        }
        ["forms", "pf", n] => Ok(GalleryItem::Module(pfaffian_module(num(n, name)?, field)?)),
        ["forms", "symdet", n] => Ok(GalleryItem::Module(symmetric_determinant_module(num(n, name)?, field)?)),
        ["clebsch"] => Ok(GalleryItem::Ideal { ideal: clebsch_ideal(field)?, candidate: Some(clebsch_gb(field)?) }),
        ["clebsch-form"] => Ok(GalleryItem::Module(clebsch_form(field)?)),
        ["cycle", n] => {
            let n = num(n, name)?;
            Ok(GalleryItem::Ideal { ideal: cycle_family(n, field)?, candidate: Some(cycle_family_gb(n, field)?) })
        }
        ["cycle-form", n] => Ok(GalleryItem::Module(cycle_module(num(n, name)?, field)?)),
        ["cayley"] => {
            let l = lines27();
            let ranking: Vec<usize> = (0..LINES).collect();
            let (j, _) = cayley_monomial_ideal(&l, &ranking)?;
            let ring = crate::poly::Ring::new(l.lines.clone(), field)?;
            let gens = j.gens().iter().map(|m| Polynomial::monomial(&ring, m.clone())).collect();
            ideal_of(gens, true)
        }
        ["lines27"] => Ok(GalleryItem::Lines(lines27())),
        _ => Err(usage(name)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        for name in [
            "remark",
            "minors:gen:2x3",
            "minors:gen:3x3:zeros=1-1,2-2",
            "minors:sym:3:zeros=1-1",
            "minors:hankel:2x4",
            "pfaffians:5:4",
            "apolar:minors:2x2",
            "apolar:perm:2x2",
            "apolar:pf:4",
            "apolar:symdet:3",
            "forms:minors:2x3",
            "forms:pf:5",
            "forms:symdet:3",
            "clebsch",
            "clebsch-form",
            "cycle:5",
            "cycle-form:6",
            "cayley",
            "lines27",
        ] {
            assert!(lookup(name, Field::Rational).is_ok(), "{name}");
        }
        assert!(lookup("nonsense", Field::Rational).is_err());
        assert!(lookup("minors:gen:2", Field::Rational).is_err());
        assert!(lookup("minors:gen:2x2:zeros=0-1", Field::Rational).is_err());
    }

    #[test]
    fn cayley_ideal_has_351_quadrics() {
        let GalleryItem::Ideal { ideal, .. } = lookup("cayley", Field::Rational).unwrap() else { panic!() };
        assert_eq!(ideal.gens().iter().filter(|g| g.total_degree().unwrap() == 2).count(), 351);
    }
}
