use std::fmt;

use super::{Catalog, FiberLabel};

/// One singular fiber: its label and, for cusp families, the contact order
/// `k >= 1`. Non-cusp entries always carry `k = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiberEntry {
    pub label: FiberLabel,
    pub contact_order: u32,
}

impl FiberEntry {
    pub fn new(label: FiberLabel, contact_order: u32) -> Self {
        let contact_order = if label.is_cusp() { contact_order } else { 1 };
        assert!(contact_order >= 1, "cusp contact order must be positive");
        Self {
            label,
            contact_order,
        }
    }

    pub fn non_cusp(label: FiberLabel) -> Self {
        Self::new(label, 1)
    }

    pub fn components_minus_one(&self) -> i64 {
        self.label.components_minus_one().eval(self.contact_order)
    }

    pub fn disc_valuation(&self) -> i64 {
        self.label.disc_valuation().eval(self.contact_order)
    }

    pub fn symbol(&self) -> String {
        self.label.symbol(self.contact_order)
    }
}

/// Euler number of a fiber; equals its discriminant valuation away from
/// characteristic 2 and 3.
pub fn euler_number(entry: &FiberEntry) -> i64 {
    match entry.label {
        FiberLabel::ICusp => i64::from(entry.contact_order),
        FiberLabel::IStarCusp => i64::from(entry.contact_order) + 6,
        FiberLabel::II => 2,
        FiberLabel::III => 3,
        FiberLabel::IV => 4,
        FiberLabel::I0StarGenericJ | FiberLabel::I0StarSpecialJ => 6,
        FiberLabel::IVStar => 8,
        FiberLabel::IIIStar => 9,
        FiberLabel::IIStar => 10,
    }
}

/// A finite multiset of singular fibers, stored sorted so that equality is
/// multiset equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FiberConfiguration {
    entries: Vec<FiberEntry>,
}

impl FiberConfiguration {
    pub fn new(mut entries: Vec<FiberEntry>) -> Self {
        entries.sort();
        Self { entries }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &[FiberEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_disc_valuation(&self) -> i64 {
        self.entries.iter().map(FiberEntry::disc_valuation).sum()
    }

    pub fn trivial_lattice_rank(&self) -> i64 {
        trivial_lattice_rank(self)
    }

    pub fn max_contact_order(&self) -> Option<u32> {
        self.entries
            .iter()
            .filter(|e| e.label.is_cusp())
            .map(|e| e.contact_order)
            .max()
    }

    /// Height `n` when the discriminant degree is `12n`.
    pub fn height(&self) -> Option<i64> {
        let d = self.total_disc_valuation();
        (d % 12 == 0).then_some(d / 12)
    }

    /// True when the configuration sits at height `n >= 1` but violates the
    /// upper bound `T <= 10n`. Such formal configurations are reported, not
    /// discarded.
    pub fn exceeds_lefschetz_bound(&self) -> bool {
        match self.height() {
            Some(n) if n >= 1 => self.trivial_lattice_rank() > 10 * n,
            _ => false,
        }
    }
}

impl fmt::Display for FiberConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", e.symbol())?;
        }
        write!(f, "}}")
    }
}

/// `T = 2 + sum (m_v - 1)`.
pub fn trivial_lattice_rank(c: &FiberConfiguration) -> i64 {
    2 + c
        .entries
        .iter()
        .map(FiberEntry::components_minus_one)
        .sum::<i64>()
}

/// Calls `visit` once for every multiset of catalog entries whose total
/// discriminant valuation is exactly `degree`.
///
/// Candidates `(type, k)` are laid out in catalog order with increasing `k`;
/// multisets are generated as non-decreasing index sequences, which visits
/// each one exactly once in a fixed order.
pub fn visit_configurations<F>(cat: &Catalog, degree: u32, mut visit: F)
where
    F: FnMut(&FiberConfiguration),
{
    let degree = i64::from(degree);
    let mut candidates = Vec::new();
    for t in &cat.types {
        if t.is_cusp_family() {
            for k in 1.. {
                let e = FiberEntry::new(t.label, k);
                if e.disc_valuation() > degree {
                    break;
                }
                candidates.push((e, e.disc_valuation()));
            }
        } else {
            let e = FiberEntry::non_cusp(t.label);
            if e.disc_valuation() <= degree {
                candidates.push((e, e.disc_valuation()));
            }
        }
    }

    fn rec<F: FnMut(&FiberConfiguration)>(
        candidates: &[(FiberEntry, i64)],
        start: usize,
        remaining: i64,
        stack: &mut Vec<FiberEntry>,
        visit: &mut F,
    ) {
        if remaining == 0 {
            visit(&FiberConfiguration::new(stack.clone()));
            return;
        }
        for i in start..candidates.len() {
            let (e, v) = candidates[i];
            if v <= remaining {
                stack.push(e);
                rec(candidates, i, remaining - v, stack, visit);
                stack.pop();
            }
        }
    }

    let mut stack = Vec::new();
    rec(&candidates, 0, degree, &mut stack, &mut visit);
}

/// Every fiber configuration of total discriminant valuation `degree`, each
/// exactly once, in deterministic order.
pub fn enumerate_configurations(cat: &Catalog, degree: u32) -> Vec<FiberConfiguration> {
    let mut out = Vec::new();
    visit_configurations(cat, degree, |c| out.push(c.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kodaira::{catalog, CatalogName};
    use std::collections::BTreeSet;
    use FiberLabel::*;

    fn cfg(entries: &[(FiberLabel, u32)]) -> FiberConfiguration {
        FiberConfiguration::new(entries.iter().map(|(l, k)| FiberEntry::new(*l, *k)).collect())
    }

    #[test]
    fn rank_examples() {
        assert_eq!(trivial_lattice_rank(&FiberConfiguration::empty()), 2);
        assert_eq!(trivial_lattice_rank(&cfg(&[(IIStar, 1)])), 10);
        assert_eq!(trivial_lattice_rank(&cfg(&[(ICusp, 5)])), 6);
    }

    #[test]
    fn euler_number_examples() {
        assert_eq!(euler_number(&FiberEntry::new(ICusp, 7)), 7);
        assert_eq!(euler_number(&FiberEntry::new(IStarCusp, 1)), 7);
        assert_eq!(euler_number(&FiberEntry::non_cusp(IIStar)), 10);
    }

    #[test]
    fn euler_number_matches_valuation() {
        for lab in FiberLabel::ALL {
            for k in 1..30 {
                let e = FiberEntry::new(lab, k);
                assert_eq!(euler_number(&e), e.disc_valuation(), "{lab} k={k}");
            }
        }
    }

    #[test]
    fn non_cusp_ignores_contact_order() {
        assert_eq!(FiberEntry::new(III, 9), FiberEntry::non_cusp(III));
    }

    #[test]
    fn degree_one_and_two() {
        let full = catalog(CatalogName::Full);
        assert_eq!(enumerate_configurations(&full, 1), vec![cfg(&[(ICusp, 1)])]);
        let two: BTreeSet<_> = enumerate_configurations(&full, 2).into_iter().collect();
        let expect: BTreeSet<_> = [
            cfg(&[(ICusp, 2)]),
            cfg(&[(ICusp, 1), (ICusp, 1)]),
            cfg(&[(II, 1)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(two, expect);
    }

    #[test]
    fn degree_zero_is_empty_configuration() {
        for name in CatalogName::ALL {
            assert_eq!(
                enumerate_configurations(&catalog(name), 0),
                vec![FiberConfiguration::empty()]
            );
        }
    }

    #[test]
    fn lone_i12_is_flagged() {
        let c = cfg(&[(ICusp, 12)]);
        assert_eq!(c.trivial_lattice_rank(), 13);
        assert_eq!(c.height(), Some(1));
        assert!(c.exceeds_lefschetz_bound());
        assert!(!FiberConfiguration::empty().exceeds_lefschetz_bound());
        assert!(!cfg(&[(ICusp, 1); 12]).exceeds_lefschetz_bound());
    }

    #[test]
    fn display() {
        let c = cfg(&[(ICusp, 3), (II, 1), (IStarCusp, 2)]);
        assert_eq!(c.to_string(), "{II, I3, I2*}");
    }
}
