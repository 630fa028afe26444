//! The published summary-statistics table, kept as reference data so
//! computed rows can be checked against it.

use crate::verifier::run::StatsRow;

/// One reference row: (type, h, elements to check, flipclasses, valence
/// polynomials, irreducible, new irreducible).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PaperRow {
    pub group: &'static str,
    pub h: usize,
    pub elements_to_check: u64,
    pub flipclasses: u64,
    pub valence_polynomials: u64,
    pub irreducible: u64,
    pub new_irreducible: u64,
}

/// All published rows, in table order. Row order matters: the "new
/// irreducible" column counts first appearances reading downwards.
pub const PAPER_TABLE: [PaperRow; 20] = [
    row("A1", 1, 1, 1, 1, 1, 1),
    row("A2", 2, 1, 1, 1, 0, 0),
    row("B2", 2, 3, 8, 1, 0, 0),
    row("G2", 2, 5, 25, 1, 0, 0),
    row("A3", 3, 3, 15, 4, 3, 3),
    row("B3", 3, 16, 216, 8, 7, 4),
    row("A4", 4, 16, 363, 11, 7, 7),
    row("B4", 4, 125, 11987, 206, 198, 191),
    row("D4", 4, 53, 2283, 19, 15, 0),
    row("F4", 4, 437, 144281, 1765, 1757, 1585),
    row("A5", 5, 92, 11343, 100, 89, 89),
    row("B5", 5, 1255, 1085742, 17213, 17007, 16918),
    row("D5", 5, 285, 102724, 1203, 1184, 402),
    row("F4", 5, 350, 114018, 8421, 8317, 7726),
    row("A6", 6, 488, 425442, 2362, 2256, 2256),
    row("B6", 6, 15232, 144074849, 1838321, 1821079, 1818824),
    row("D6", 6, 6896, 31903124, 174545, 173336, 103645),
    row("E6", 6, 8720, 95718946, 1112864, 1111655, 1007217),
    row("F4", 6, 350, 99171, 10053, 9727, 9029),
    row("A7", 7, 4072, 25935215, 95296, 92913, 92913),
];

const fn row(
    group: &'static str,
    h: usize,
    elements_to_check: u64,
    flipclasses: u64,
    valence_polynomials: u64,
    irreducible: u64,
    new_irreducible: u64,
) -> PaperRow {
    PaperRow {
        group,
        h,
        elements_to_check,
        flipclasses,
        valence_polynomials,
        irreducible,
        new_irreducible,
    }
}

/// Looks up the published row for a (group, h) pair.
pub fn paper_row(group: &str, h: usize) -> Option<&'static PaperRow> {
    PAPER_TABLE.iter().find(|r| r.group == group && r.h == h)
}

/// Compares computed rows against the published table. Returns hard
/// mismatches and soft notes separately: the published F4 rows at
/// h = 5, 6 both list 350 elements to check, so a divergence in that
/// column on those rows is reported as a note rather than forced to
/// agree.
pub fn compare_to_paper(stats: &[StatsRow]) -> (Vec<String>, Vec<String>) {
    let mut mismatches = Vec::new();
    let mut notes = Vec::new();
    for row in stats {
        let Some(expect) = paper_row(&row.group, row.h) else {
            notes.push(format!(
                "{} h={} has no published reference row",
                row.group, row.h
            ));
            continue;
        };
        let f4_elements_caveat = row.group == "F4" && (row.h == 5 || row.h == 6);
        if row.elements_to_check != expect.elements_to_check {
            let msg = format!(
                "{} h={}: elements_to_check computed {} vs published {}",
                row.group, row.h, row.elements_to_check, expect.elements_to_check
            );
            if f4_elements_caveat {
                notes.push(msg);
            } else {
                mismatches.push(msg);
            }
        }
        for (name, got, want) in [
            ("flipclasses", row.flipclasses, expect.flipclasses),
            (
                "valence_polynomials",
                row.valence_polynomials,
                expect.valence_polynomials,
            ),
            (
                "irreducible_valence_polynomials",
                row.irreducible_valence_polynomials,
                expect.irreducible,
            ),
            (
                "new_irreducible_valence_polynomials",
                row.new_irreducible_valence_polynomials,
                expect.new_irreducible,
            ),
        ] {
            if got != want {
                mismatches.push(format!(
                    "{} h={}: {name} computed {got} vs published {want}",
                    row.group, row.h
                ));
            }
        }
    }
    (mismatches, notes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_finds_distinct_f4_rows() {
        assert_eq!(paper_row("F4", 4).unwrap().flipclasses, 144281);
        assert_eq!(paper_row("F4", 5).unwrap().flipclasses, 114018);
        assert_eq!(paper_row("F4", 6).unwrap().flipclasses, 99171);
        assert!(paper_row("F4", 7).is_none());
        assert!(paper_row("H3", 3).is_none());
    }

    #[test]
    fn comparison_separates_mismatches_from_f4_notes() {
        let good = StatsRow {
            group: "A3".into(),
            h: 3,
            elements_to_check: 3,
            flipclasses: 15,
            valence_polynomials: 4,
            irreducible_valence_polynomials: 3,
            new_irreducible_valence_polynomials: 3,
        };
        let (mismatches, notes) = compare_to_paper(std::slice::from_ref(&good));
        assert!(mismatches.is_empty() && notes.is_empty());

        let mut bad = good.clone();
        bad.flipclasses = 14;
        let (mismatches, _) = compare_to_paper(std::slice::from_ref(&bad));
        assert_eq!(mismatches.len(), 1);

        let f4 = StatsRow {
            group: "F4".into(),
            h: 5,
            elements_to_check: 351,
            flipclasses: 114018,
            valence_polynomials: 8421,
            irreducible_valence_polynomials: 8317,
            new_irreducible_valence_polynomials: 7726,
        };
        let (mismatches, notes) = compare_to_paper(std::slice::from_ref(&f4));
        assert!(mismatches.is_empty());
        assert_eq!(notes.len(), 1);
    }
}
