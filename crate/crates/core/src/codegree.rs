//! Character kernels, codegrees, the normal-subgroup lattice, and the
//! instance checks behind the classification of nonsolvable groups with
//! exactly three nonlinear irreducible character codegrees.
//!
//! The codegree of an irreducible character is
//! `cod(chi) = |G : ker(chi)| / chi(1)`, always a positive integer.
//! `cod(G)` collects the codegrees of all irreducible characters and
//! `cod(G|G')` those of the nonlinear ones (exactly the characters whose
//! kernel misses the derived subgroup's classes).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::chartab::{character_table, CharacterTable};
use crate::families::{self, FamilySpec};
use crate::permgroup::{is_solvable_elements, Group, Permutation};

/// A normal subgroup represented as a union of conjugacy classes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NormalSubgroup {
    /// Sorted class indices; always contains class 0.
    classes: Vec<usize>,
    order: u64,
}

impl NormalSubgroup {
    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn contains_class(&self, c: usize) -> bool {
        self.classes.binary_search(&c).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// All member elements, pulled out of the parent group's class lists.
    pub fn elements(&self, g: &Group) -> Vec<Permutation> {
        let mut out = Vec::with_capacity(self.order as usize);
        for &c in &self.classes {
            for &m in g.classes().members(c) {
                out.push(g.element(m as usize).clone());
            }
        }
        out
    }

    fn from_classes(t: &CharacterTable, mut classes: Vec<usize>) -> NormalSubgroup {
        classes.sort_unstable();
        classes.dedup();
        let order = classes.iter().map(|&c| t.class_sizes()[c]).sum();
        NormalSubgroup { classes, order }
    }
}

/// Exhaustive desk-scale verification that a class union really is a
/// subgroup (normality is automatic for class unions): regenerate the group
/// from its elements and compare orders, and check inverse-closure.
pub fn verify_class_union_subgroup(g: &Group, n: &NormalSubgroup) -> bool {
    if !n.contains_class(0) {
        return false;
    }
    if n.classes.iter().any(|&c| !n.contains_class(g.classes().inverse_class(c))) {
        return false;
    }
    let elements = n.elements(g);
    let gens = crate::permgroup::reduce_generators(g.degree(), &elements);
    match crate::permgroup::generate_group(g.degree(), &gens, n.order) {
        Ok(h) => h.order() == n.order,
        Err(_) => false,
    }
}

/// Kernel of the character in `row`: the classes where the value equals the
/// degree. Exact by multiplicity inspection: the value is a sum of `chi(1)`
/// roots of unity, so value = degree forces every eigenvalue to be 1, i.e.
/// the full multiplicity sits on the exponent-0 slot.
pub fn kernel_of(t: &CharacterTable, row: usize) -> NormalSubgroup {
    let classes: Vec<usize> = (0..t.num_classes())
        .filter(|&c| t.value(row, c).is_full_weight())
        .collect();
    NormalSubgroup::from_classes(t, classes)
}

/// `cod(chi) = |G : ker(chi)| / chi(1)`, asserted to be an exact integer.
pub fn codegree(t: &CharacterTable, row: usize) -> u64 {
    let ker = kernel_of(t, row);
    assert_eq!(
        t.order() % ker.order(),
        0,
        "kernel order must divide the group order"
    );
    let index = t.order() / ker.order();
    let degree = t.degree(row);
    assert_eq!(
        index % degree,
        0,
        "character degree must divide the kernel index"
    );
    index / degree
}

/// `(cod(G), cod(G|G'))`: codegrees of all rows, and of the nonlinear rows.
pub fn cod_sets(t: &CharacterTable) -> (Vec<u64>, Vec<u64>) {
    let mut all = Vec::with_capacity(t.num_classes());
    let mut nonlinear = Vec::new();
    for row in 0..t.num_classes() {
        let cod = codegree(t, row);
        all.push(cod);
        if t.degree(row) > 1 {
            nonlinear.push(cod);
        }
    }
    (sort_dedup(all), sort_dedup(nonlinear))
}

fn sort_dedup(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    v.dedup();
    v
}

/// The full normal-subgroup lattice: every normal subgroup is an
/// intersection of character kernels, so close the kernel set under pairwise
/// intersection. Sorted by (order, class list).
pub fn normal_subgroups(t: &CharacterTable) -> Vec<NormalSubgroup> {
    let mut known: Vec<NormalSubgroup> = Vec::new();
    for row in 0..t.num_classes() {
        let ker = kernel_of(t, row);
        if !known.contains(&ker) {
            known.push(ker);
        }
    }
    let mut head = 0;
    while head < known.len() {
        let current = known[head].clone();
        head += 1;
        for i in 0..head - 1 {
            let meet: Vec<usize> = current
                .classes
                .iter()
                .copied()
                .filter(|&c| known[i].contains_class(c))
                .collect();
            let meet = NormalSubgroup::from_classes(t, meet);
            if !known.contains(&meet) {
                known.push(meet);
            }
        }
    }
    known.sort_by(|a, b| (a.order, &a.classes).cmp(&(b.order, &b.classes)));
    known
}

/// `cd(G|N)`: degrees of the characters whose kernel does not contain `N`.
pub fn cd_relative(t: &CharacterTable, n: &NormalSubgroup) -> Vec<u64> {
    let degrees: Vec<u64> = (0..t.num_classes())
        .filter(|&row| {
            n.classes
                .iter()
                .any(|&c| !t.value(row, c).is_full_weight())
        })
        .map(|row| t.degree(row))
        .collect();
    sort_dedup(degrees)
}

/// `cod(G/N | (G/N)')` computed without building the quotient: the
/// characters of `G/N` are exactly the characters of `G` with `N <= ker`,
/// and both the degree and the codegree agree with the inflated character's.
pub fn cod_nonlinear_of_quotient(t: &CharacterTable, n: &NormalSubgroup) -> Vec<u64> {
    let cods: Vec<u64> = (0..t.num_classes())
        .filter(|&row| t.degree(row) > 1)
        .filter(|&row| {
            n.classes
                .iter()
                .all(|&c| t.value(row, c).is_full_weight())
        })
        .map(|row| codegree(t, row))
        .collect();
    sort_dedup(cods)
}

/// Outcome of one instance check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    NotApplicable,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub status: CheckStatus,
    /// Mandatory on failure; explains the reason for a not-applicable.
    pub witness: Option<String>,
}

impl CheckReport {
    fn pass() -> CheckReport {
        CheckReport {
            status: CheckStatus::Pass,
            witness: None,
        }
    }

    fn not_applicable(reason: &str) -> CheckReport {
        CheckReport {
            status: CheckStatus::NotApplicable,
            witness: Some(String::from(reason)),
        }
    }

    fn fail(witness: String) -> CheckReport {
        CheckReport {
            status: CheckStatus::Fail,
            witness: Some(witness),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

/// For non-perfect `G`, the smallest prime `p` dividing `|G/G'|` never
/// appears in `cod(G|G')`, and `|cod(G)| - |cod(G|G')| >= 2`. Perfect
/// groups are out of scope (not-applicable) — there the difference is
/// exactly 1 because `cod(G) = {1} + cod(G|G')`.
pub fn check_lemma_smallest_prime(g: &Group, t: &CharacterTable) -> CheckReport {
    let derived_order: u64 = g
        .derived_class_set()
        .iter()
        .map(|&c| g.classes().size(c))
        .sum();
    let abelianization = g.order() / derived_order;
    if abelianization == 1 {
        return CheckReport::not_applicable("perfect group: |G/G'| = 1");
    }
    let p = crate::numth::factorize(abelianization)[0].0;
    let (cod_all, cod_nonlinear) = cod_sets(t);
    if cod_nonlinear.binary_search(&p).is_ok() {
        return CheckReport::fail(format!(
            "smallest prime {p} of |G/G'| = {abelianization} lies in cod(G|G') = {cod_nonlinear:?}"
        ));
    }
    if cod_all.len() < cod_nonlinear.len() + 2 {
        return CheckReport::fail(format!(
            "|cod(G)| - |cod(G|G')| = {} < 2 (cod(G) = {cod_all:?}, cod(G|G') = {cod_nonlinear:?})",
            cod_all.len() - cod_nonlinear.len()
        ));
    }
    CheckReport::pass()
}

/// Instance check of the Isaacs–Knutson solvability theorem: every
/// nontrivial normal subgroup `N` with `|cd(G|N)| <= 2` must be solvable.
pub fn check_isaacs_knutson_instance(g: &Group, t: &CharacterTable) -> CheckReport {
    for n in normal_subgroups(t) {
        if n.is_trivial() {
            continue;
        }
        let cd = cd_relative(t, &n);
        if cd.len() <= 2 && !is_solvable_elements(g.degree(), &n.elements(g)) {
            return CheckReport::fail(format!(
                "nonsolvable N of order {} has cd(G|N) = {cd:?} with size <= 2",
                n.order()
            ));
        }
    }
    CheckReport::pass()
}

/// Instance check of the strict quotient containment: for every proper
/// nontrivial normal `N` with `G/N` nonsolvable (in this corpus such
/// quotients are almost simple with socle `L2(q)`),
/// `cod(G/N|(G/N)') ⊊ cod(G|G')`.
pub fn check_quotient_strict_containment(g: &Group, t: &CharacterTable) -> CheckReport {
    if g.is_solvable() {
        return CheckReport::not_applicable("solvable group");
    }
    let residual = g.residual_class_set();
    let (_, cod_nonlinear) = cod_sets(t);
    let mut instances = 0usize;
    for n in normal_subgroups(t) {
        if n.is_trivial() || n.order() == g.order() {
            continue;
        }
        // G/N is solvable exactly when N contains the solvable residual.
        if residual.iter().all(|&c| n.contains_class(c)) {
            continue;
        }
        instances += 1;
        let quotient = cod_nonlinear_of_quotient(t, &n);
        // The quotient set is a subset by construction; strictness is the
        // claim under test.
        if quotient == cod_nonlinear {
            return CheckReport::fail(format!(
                "quotient by N of order {} has the same nonlinear codegrees {quotient:?}",
                n.order()
            ));
        }
    }
    if instances == 0 {
        return CheckReport::not_applicable("no proper nontrivial N with nonsolvable quotient");
    }
    CheckReport::pass()
}

/// Classification verdict for one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Solvable group: the classification only concerns nonsolvable ones.
    NotApplicable,
    /// Nonsolvable with `|cod(G|G')| != 3`.
    NotThree { cod_nonlinear: Vec<u64> },
    /// Nonsolvable with exactly three nonlinear codegrees, matching a family
    /// member's fingerprint.
    ThreeMatched { family: FamilyTag, q: u64 },
    /// Nonsolvable with exactly three nonlinear codegrees but no family
    /// fingerprint match — a counterexample to the classification; must
    /// never occur.
    ThreeUnmatched { cod_nonlinear: Vec<u64> },
}

/// The three families of the classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyTag {
    L2Even,
    Pgl2Odd,
    M10,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::L2Even => f.write_str("L2(2^f)"),
            FamilyTag::Pgl2Odd => f.write_str("PGL2(q)"),
            FamilyTag::M10 => f.write_str("M10"),
        }
    }
}

/// Isomorphism fingerprint used instead of a full isomorphism test: order,
/// degree multiset, nonlinear codegree set, and element-order spectrum.
/// These four invariants separate the three order-720 extensions of `A6`
/// (PGL2(9) has elements of order 10, S6 of order 6, M10 of order 8 but
/// neither 6 nor 10).
fn fingerprint(g: &Group, t: &CharacterTable) -> (u64, Vec<u64>, Vec<u64>, Vec<u64>) {
    let mut degrees = t.degrees().to_vec();
    degrees.sort_unstable();
    let (_, cod_nonlinear) = cod_sets(t);
    (g.order(), degrees, cod_nonlinear, g.order_spectrum())
}

fn family_tag(spec: &FamilySpec) -> FamilyTag {
    match spec.kind() {
        crate::families::FamilyKind::L2 => FamilyTag::L2Even,
        crate::families::FamilyKind::Pgl2 => FamilyTag::Pgl2Odd,
        _ => FamilyTag::M10,
    }
}

/// Classifies one group against "nonsolvable with exactly three nonlinear
/// codegrees means `L2(2^f)`, `PGL2(q)` for odd `q >= 5`, or `M10`". A
/// candidate family member of the same order is constructed, its table
/// computed, and the two fingerprints compared.
pub fn classify_theorem_a(g: &Group, t: &CharacterTable) -> Verdict {
    if g.is_solvable() {
        return Verdict::NotApplicable;
    }
    let (_, cod_nonlinear) = cod_sets(t);
    if cod_nonlinear.len() != 3 {
        return Verdict::NotThree { cod_nonlinear };
    }
    let own = fingerprint(g, t);
    for spec in families::theorem_a_family_specs() {
        if spec.expected_order() != g.order() {
            continue;
        }
        let candidate = families::build(&spec)
            .expect("family members within the supported range construct");
        let candidate_table =
            character_table(&candidate).expect("family member tables compute");
        if fingerprint(&candidate, &candidate_table) == own {
            return Verdict::ThreeMatched {
                family: family_tag(&spec),
                q: spec.q(),
            };
        }
    }
    Verdict::ThreeUnmatched { cod_nonlinear }
}

/// Everything the report layer needs about one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodegreeReport {
    pub id: String,
    pub order: u64,
    /// Degree multiset, ascending.
    pub degrees: Vec<u64>,
    pub cod_all: Vec<u64>,
    pub cod_nonlinear: Vec<u64>,
    pub solvable: bool,
    pub verdict: Verdict,
}

pub fn codegree_report(id: &str, g: &Group, t: &CharacterTable) -> CodegreeReport {
    let (cod_all, cod_nonlinear) = cod_sets(t);
    let mut degrees = t.degrees().to_vec();
    degrees.sort_unstable();
    CodegreeReport {
        id: String::from(id),
        order: g.order(),
        degrees,
        cod_all,
        cod_nonlinear,
        solvable: g.is_solvable(),
        verdict: classify_theorem_a(g, t),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::families::{l2_type_group, sl2, FamilyKind};
    use crate::permgroup::generate_group;
    use alloc::vec;

    fn group(degree: usize, gens: &[&str]) -> Group {
        let gens: Vec<Permutation> = gens.iter().map(|s| Permutation::parse(s).unwrap()).collect();
        generate_group(degree, &gens, 1_000_000).unwrap()
    }

    fn table_of(g: &Group) -> CharacterTable {
        character_table(g).unwrap()
    }

    #[test]
    fn s3_codegrees() {
        let g = group(3, &["2 1 3", "2 3 1"]);
        let t = table_of(&g);
        assert_eq!(codegree(&t, 0), 1);
        let (all, nonlinear) = cod_sets(&t);
        assert_eq!(all, vec![1, 2, 3]);
        assert_eq!(nonlinear, vec![3]);
    }

    #[test]
    fn kernel_examples() {
        let g = group(3, &["2 1 3", "2 3 1"]);
        let t = table_of(&g);
        // Trivial character: kernel is everything.
        assert_eq!(kernel_of(&t, 0).order(), 6);
        // Sign character: kernel is the rotation subgroup C3.
        assert_eq!(kernel_of(&t, 1).order(), 3);
        // Standard character is faithful.
        assert_eq!(kernel_of(&t, 2).order(), 1);
    }

    #[test]
    fn psl2_4_codegrees_and_verdict() {
        let spec = FamilySpec::new(FamilyKind::L2, 4).unwrap();
        let g = l2_type_group(&spec).unwrap();
        let t = table_of(&g);
        let (all, nonlinear) = cod_sets(&t);
        assert_eq!(nonlinear, vec![12, 15, 20]);
        assert_eq!(all, vec![1, 12, 15, 20]);
        // Faithful degree-5 row: codegree 60/5.
        let row5 = (0..5).find(|&r| t.degree(r) == 5).unwrap();
        assert_eq!(kernel_of(&t, row5).order(), 1);
        assert_eq!(codegree(&t, row5), 12);
        assert_eq!(
            classify_theorem_a(&g, &t),
            Verdict::ThreeMatched {
                family: FamilyTag::L2Even,
                q: 4
            }
        );
    }

    #[test]
    fn simple_group_lattice_is_trivial() {
        let spec = FamilySpec::new(FamilyKind::L2, 4).unwrap();
        let g = l2_type_group(&spec).unwrap();
        let t = table_of(&g);
        let lattice = normal_subgroups(&t);
        let orders: Vec<u64> = lattice.iter().map(NormalSubgroup::order).collect();
        assert_eq!(orders, vec![1, 60]);
        for n in &lattice {
            assert!(verify_class_union_subgroup(&g, n));
        }
    }

    #[test]
    fn s4_lattice() {
        let g = group(4, &["2 1 3 4", "2 3 4 1"]);
        let t = table_of(&g);
        let orders: Vec<u64> = normal_subgroups(&t).iter().map(NormalSubgroup::order).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        for n in &normal_subgroups(&t) {
            assert!(verify_class_union_subgroup(&g, n));
        }
    }

    #[test]
    fn sl2_5_center_and_quotient() {
        let g = sl2(5).unwrap();
        let t = table_of(&g);
        let lattice = normal_subgroups(&t);
        let orders: Vec<u64> = lattice.iter().map(NormalSubgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 120], "1 < Z < SL2(5)");
        let center = &lattice[1];

        // Inflated degree-3 characters have the center in their kernel.
        let row3 = (0..t.num_classes()).find(|&r| t.degree(r) == 3).unwrap();
        assert_eq!(kernel_of(&t, row3).order(), 2);

        let (_, nonlinear) = cod_sets(&t);
        assert_eq!(nonlinear, vec![12, 15, 20, 30, 60]);
        let quotient = cod_nonlinear_of_quotient(&t, center);
        assert_eq!(quotient, vec![12, 15, 20], "L2(5) = L2(4) values");
        assert_ne!(quotient, nonlinear, "containment is strict");

        // cd(G|Z) collects the faithful degrees.
        assert_eq!(cd_relative(&t, center), vec![2, 4, 6]);

        assert_eq!(
            check_quotient_strict_containment(&g, &t).status,
            CheckStatus::Pass
        );
    }

    #[test]
    fn lemma_smallest_prime_cases() {
        // S3: p = 2, cod(G|G') = {3}.
        let s3 = group(3, &["2 1 3", "2 3 1"]);
        let t3 = table_of(&s3);
        assert_eq!(check_lemma_smallest_prime(&s3, &t3).status, CheckStatus::Pass);

        // Perfect group: not applicable.
        let spec = FamilySpec::new(FamilyKind::L2, 4).unwrap();
        let a5 = l2_type_group(&spec).unwrap();
        let t5 = table_of(&a5);
        let report = check_lemma_smallest_prime(&a5, &t5);
        assert_eq!(report.status, CheckStatus::NotApplicable);
        // Perfect groups instead satisfy |cod(G)| - |cod(G|G')| = 1.
        let (all, nonlinear) = cod_sets(&t5);
        assert_eq!(all.len(), nonlinear.len() + 1);
    }

    #[test]
    fn isaacs_knutson_on_small_groups() {
        for gens in [
            vec!["2 1 3", "2 3 1"],          // S3
            vec!["2 1 3 4", "2 3 4 1"],      // S4
            vec!["2 3 4 1 6 7 8 5", "5 8 7 6 3 2 1 4"], // Q8
        ] {
            let g = group(gens[0].split_whitespace().count(), &gens);
            let t = table_of(&g);
            assert_eq!(
                check_isaacs_knutson_instance(&g, &t).status,
                CheckStatus::Pass
            );
        }
        let g = sl2(5).unwrap();
        let t = table_of(&g);
        assert_eq!(check_isaacs_knutson_instance(&g, &t).status, CheckStatus::Pass);
    }

    #[test]
    fn verdicts_by_shape() {
        // Solvable.
        let s4 = group(4, &["2 1 3 4", "2 3 4 1"]);
        let t4 = table_of(&s4);
        assert_eq!(classify_theorem_a(&s4, &t4), Verdict::NotApplicable);

        // Nonsolvable, three codegrees, PGL2(5) by way of S5 generators.
        let s5 = group(5, &["2 1 3 4 5", "2 3 4 5 1"]);
        let t5 = table_of(&s5);
        assert_eq!(
            classify_theorem_a(&s5, &t5),
            Verdict::ThreeMatched {
                family: FamilyTag::Pgl2Odd,
                q: 5
            }
        );

        // Nonsolvable, five codegrees.
        let g = sl2(5).unwrap();
        let t = table_of(&g);
        assert_eq!(
            classify_theorem_a(&g, &t),
            Verdict::NotThree {
                cod_nonlinear: vec![12, 15, 20, 30, 60]
            }
        );
    }

    #[test]
    fn report_fields_are_consistent() {
        let g = group(5, &["2 1 3 4 5", "2 3 4 5 1"]);
        let t = table_of(&g);
        let r = codegree_report("s5", &g, &t);
        assert_eq!(r.order, 120);
        assert_eq!(r.degrees, vec![1, 1, 4, 4, 5, 5, 6]);
        assert_eq!(r.cod_nonlinear, vec![20, 24, 30]);
        assert_eq!(r.cod_all, vec![1, 2, 20, 24, 30]);
        assert!(!r.solvable);
        // Every codegree divides the order; 1 is present.
        assert!(r.cod_all.iter().all(|&c| r.order % c == 0));
        assert!(r.cod_all.contains(&1));
        // cod_nonlinear is a subset of cod_all.
        assert!(r
            .cod_nonlinear
            .iter()
            .all(|c| r.cod_all.binary_search(c).is_ok()));
    }
}
