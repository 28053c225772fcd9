use crate::groups::{
    make_family, parse_table, write_table, BadKind, Family, FamilyTag, FiniteGroup,
};

use super::{ClassifyError, LiftableTag};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    Liftable(LiftableTag),
    NotLiftable(BadKind),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: FiniteGroup,
    pub expected: Expected,
}

/// Test groups of order at most 32 with their expected verdicts.
pub fn catalog() -> Result<Vec<CatalogEntry>, ClassifyError> {
    use BadKind::*;
    use Expected::{Liftable as L, NotLiftable as N};
    use FamilyTag::*;
    let fam = |t| L(LiftableTag::Family(t));

    let mut specs: Vec<(Family, Expected)> = vec![(Family::Cyclic(1), L(LiftableTag::Trivial))];
    for a in 1..=5 {
        specs.push((Family::Cyclic(1 << a), fam(C2n { a })));
    }
    for a in 0..=3 {
        specs.push((Family::Cyclic(3 << a), fam(C3xC2n { a })));
    }
    specs.extend([
        (Family::SemidirectC3C2n(1), fam(C3semiC2n { a: 1 })),
        (Family::SemidirectC3C2n(2), fam(C3semiC2n { a: 2 })),
        (Family::SemidirectC3C2n(3), fam(C3semiC2n { a: 3 })),
        (Family::DirectProduct(3, 4), fam(C3xC2n { a: 2 })),
        (Family::GeneralizedQuaternion(8), N(Q8)),
        (Family::GeneralizedQuaternion(16), N(Q8)),
        (Family::GeneralizedQuaternion(32), N(Q8)),
        (Family::Dihedral(8), N(C2xC2)),
        (Family::Dihedral(16), N(C2xC2)),
        (Family::DirectProduct(2, 2), N(C2xC2)),
        (Family::DirectProduct(2, 4), N(C2xC2)),
        (Family::ElementaryAbelian(2, 3), N(C2xC2)),
        (Family::DirectProduct(6, 2), N(C2xC2)),
        (Family::ElementaryAbelian(3, 2), N(C3xC3)),
        (Family::Cyclic(9), N(C9)),
        (Family::Cyclic(27), N(C9)),
        (Family::Cyclic(5), N(Cp(5))),
        (Family::Cyclic(7), N(Cp(7))),
        (Family::Cyclic(10), N(Cp(5))),
        (Family::Cyclic(15), N(Cp(5))),
    ]);
    let mut out = specs
        .into_iter()
        .map(|(f, expected)| {
            Ok(CatalogEntry {
                name: f.to_string(),
                group: make_family(&f)?,
                expected,
            })
        })
        .collect::<Result<Vec<_>, ClassifyError>>()?;
    // A4 enters through its multiplication table alone, with a derived presentation.
    let a4 = parse_table(&write_table(&make_family(&Family::Alternating4)?))?;
    out.push(CatalogEntry {
        name: "A4".into(),
        group: a4,
        expected: N(C2xC2),
    });
    Ok(out)
}
