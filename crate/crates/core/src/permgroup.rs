//! Finite permutation groups by exhaustive enumeration.
//!
//! Points are `0..degree` internally (`u16`), parsed and printed 1-based.
//! Permutations act on the right: `compose(p, q)` means "apply `p`, then `q`".
//! Groups are enumerated breadth-first from their generators, which fixes a
//! canonical element order (identity first) that every downstream structure
//! — conjugacy classes, class matrices, character tables — inherits, so equal
//! inputs yield byte-identical outputs.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_integer::Integer;
use thiserror::Error;

/// Largest permutation degree accepted (points per permutation).
pub const MAX_DEGREE: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("token `{0}` is not a positive integer")]
    BadToken(String),
    #[error("image {got} out of range 1..={degree}")]
    ImageOutOfRange { got: u64, degree: usize },
    #[error("image {0} appears twice")]
    DuplicateImage(u64),
    #[error("permutation has {got} images, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("degree {0} exceeds the supported maximum {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("degree must be at least 1")]
    DegreeZero,
    #[error("missing degree line")]
    MissingDegree,
    #[error("group order exceeds the cap {0}")]
    OrderCapExceeded(u64),
}

/// A permutation of `0..degree`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    /// The identity on `degree` points.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from 0-based images, validating bijectivity.
    pub fn from_images(images: Vec<u16>) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::DegreeZero);
        }
        if n > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if (x as usize) >= n {
                return Err(PermError::ImageOutOfRange {
                    got: x as u64 + 1,
                    degree: n,
                });
            }
            if seen[x as usize] {
                return Err(PermError::DuplicateImage(x as u64 + 1));
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses one permutation as whitespace-separated 1-based images.
    pub fn parse(line: &str) -> Result<Self, PermError> {
        let mut images = Vec::new();
        for tok in line.split_whitespace() {
            let v: u64 = tok
                .parse()
                .map_err(|_| PermError::BadToken(tok.to_string()))?;
            if v == 0 {
                return Err(PermError::BadToken(tok.to_string()));
            }
            images.push(v);
        }
        let n = images.len();
        if n == 0 {
            return Err(PermError::DegreeZero);
        }
        if n > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(n));
        }
        let mut zero_based = Vec::with_capacity(n);
        for v in images {
            if v > n as u64 {
                return Err(PermError::ImageOutOfRange { got: v, degree: n });
            }
            zero_based.push((v - 1) as u16);
        }
        Permutation::from_images(zero_based)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn apply(&self, x: u16) -> u16 {
        self.images[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` then `other`: `(self * other)(x) = other(self(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    /// Allocation-free [`Permutation::compose`] into a scratch buffer.
    fn compose_into(&self, other: &Permutation, out: &mut Vec<u16>) {
        out.clear();
        out.extend(self.images.iter().map(|&x| other.images[x as usize]));
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    /// Order of the permutation: lcm of its cycle lengths.
    pub fn order(&self) -> u64 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut order = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            order = order.lcm(&len);
        }
        order
    }
}

impl fmt::Display for Permutation {
    /// Space-separated 1-based images, the `.gens` line format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        Ok(())
    }
}

/// Parses the `.gens` file format: the first significant line is the degree,
/// every further significant line one permutation (1-based images). Blank
/// lines and `#` comments are ignored.
pub fn parse_gens(text: &str) -> Result<(usize, Vec<Permutation>), PermError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let degree_line = lines.next().ok_or(PermError::MissingDegree)?;
    let degree: usize = degree_line
        .parse()
        .map_err(|_| PermError::BadToken(degree_line.to_string()))?;
    if degree == 0 {
        return Err(PermError::DegreeZero);
    }
    if degree > MAX_DEGREE {
        return Err(PermError::DegreeTooLarge(degree));
    }
    let mut gens = Vec::new();
    for line in lines {
        let p = Permutation::parse(line)?;
        if p.degree() != degree {
            return Err(PermError::DegreeMismatch {
                expected: degree,
                got: p.degree(),
            });
        }
        gens.push(p);
    }
    Ok((degree, gens))
}

/// Conjugacy class data of a [`Group`], in the canonical class order:
/// ascending (size, representative element order, representative index),
/// so class 0 is always the identity class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTable {
    /// Element index -> class index.
    class_of: Vec<u32>,
    /// Class sizes.
    sizes: Vec<u64>,
    /// Element index of each class representative (smallest in the class).
    reps: Vec<u32>,
    /// Orders of the representatives (= of every member).
    rep_orders: Vec<u64>,
    /// Class index of the inverse class.
    inverse_class: Vec<usize>,
    /// Member element indices per class, ascending.
    members: Vec<Vec<u32>>,
    /// `power_classes[c][m]` = class of `rep_c^m`, for `m < rep_orders[c]`.
    power_classes: Vec<Vec<usize>>,
}

impl ClassTable {
    pub fn num_classes(&self) -> usize {
        self.sizes.len()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element] as usize
    }

    pub fn size(&self, class: usize) -> u64 {
        self.sizes[class]
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn rep(&self, class: usize) -> usize {
        self.reps[class] as usize
    }

    pub fn rep_order(&self, class: usize) -> u64 {
        self.rep_orders[class]
    }

    pub fn rep_orders(&self) -> &[u64] {
        &self.rep_orders
    }

    pub fn inverse_class(&self, class: usize) -> usize {
        self.inverse_class[class]
    }

    pub fn members(&self, class: usize) -> &[u32] {
        &self.members[class]
    }

    /// Class of `rep_c^m` for any `m >= 0`.
    pub fn power_class(&self, class: usize, m: u64) -> usize {
        let o = self.rep_orders[class];
        self.power_classes[class][(m % o) as usize]
    }
}

/// A finite permutation group, exhaustively enumerated.
#[derive(Debug, Clone)]
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    /// All elements in BFS order from the identity; the canonical order.
    elements: Vec<Permutation>,
    /// Element images -> index in `elements`.
    index: BTreeMap<Vec<u16>, u32>,
    classes: ClassTable,
}

/// Enumerates the group generated by `gens` on `degree` points.
///
/// Fails if the order would exceed `max_order`. An empty generator list
/// yields the trivial group.
pub fn generate_group(
    degree: usize,
    gens: &[Permutation],
    max_order: u64,
) -> Result<Group, PermError> {
    if degree == 0 {
        return Err(PermError::DegreeZero);
    }
    if degree > MAX_DEGREE {
        return Err(PermError::DegreeTooLarge(degree));
    }
    for g in gens {
        if g.degree() != degree {
            return Err(PermError::DegreeMismatch {
                expected: degree,
                got: g.degree(),
            });
        }
    }
    let elements = close_under(degree, &[Permutation::identity(degree)], gens, max_order)?;
    let mut index = BTreeMap::new();
    for (i, e) in elements.iter().enumerate() {
        index.insert(e.images.clone(), i as u32);
    }
    let classes = conjugacy_classes(&elements, &index, gens);
    Ok(Group {
        degree,
        generators: gens.to_vec(),
        elements,
        index,
        classes,
    })
}

/// BFS closure of `seed` under right multiplication by `gens`.
/// `seed` entries must be distinct; the result preserves seed order.
fn close_under(
    degree: usize,
    seed: &[Permutation],
    gens: &[Permutation],
    max_order: u64,
) -> Result<Vec<Permutation>, PermError> {
    let mut elements: Vec<Permutation> = seed.to_vec();
    let mut index: BTreeMap<Vec<u16>, u32> = BTreeMap::new();
    for (i, e) in elements.iter().enumerate() {
        debug_assert_eq!(e.degree(), degree);
        index.insert(e.images.clone(), i as u32);
    }
    let mut scratch: Vec<u16> = Vec::with_capacity(degree);
    let mut head = 0usize;
    while head < elements.len() {
        for g in gens {
            elements[head].compose_into(g, &mut scratch);
            if !index.contains_key(&scratch) {
                if elements.len() as u64 >= max_order {
                    return Err(PermError::OrderCapExceeded(max_order));
                }
                index.insert(scratch.clone(), elements.len() as u32);
                elements.push(Permutation {
                    images: scratch.clone(),
                });
            }
        }
        head += 1;
    }
    Ok(elements)
}

/// Conjugacy classes as orbits of the conjugation action of the generators.
fn conjugacy_classes(
    elements: &[Permutation],
    index: &BTreeMap<Vec<u16>, u32>,
    gens: &[Permutation],
) -> ClassTable {
    let n = elements.len();
    let gen_invs: Vec<Permutation> = gens.iter().map(Permutation::inverse).collect();
    let mut class_of_raw = vec![u32::MAX; n];
    let mut raw_classes: Vec<Vec<u32>> = Vec::new();
    for e in 0..n {
        if class_of_raw[e] != u32::MAX {
            continue;
        }
        let cid = raw_classes.len() as u32;
        class_of_raw[e] = cid;
        let mut members = vec![e as u32];
        let mut head = 0usize;
        while head < members.len() {
            let x = &elements[members[head] as usize];
            head += 1;
            for (g, gi) in gens.iter().zip(&gen_invs) {
                let conj = gi.compose(x).compose(g);
                let y = index[&conj.images];
                if class_of_raw[y as usize] == u32::MAX {
                    class_of_raw[y as usize] = cid;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        raw_classes.push(members);
    }

    // Canonical class order: (size, representative order, representative index).
    let mut keyed: Vec<(u64, u64, u32, Vec<u32>)> = raw_classes
        .into_iter()
        .map(|members| {
            let rep = members[0];
            let ord = elements[rep as usize].order();
            (members.len() as u64, ord, rep, members)
        })
        .collect();
    keyed.sort();

    let k = keyed.len();
    let mut class_of = vec![0u32; n];
    let mut sizes = Vec::with_capacity(k);
    let mut reps = Vec::with_capacity(k);
    let mut rep_orders = Vec::with_capacity(k);
    let mut members_out = Vec::with_capacity(k);
    for (c, (size, ord, rep, members)) in keyed.into_iter().enumerate() {
        for &m in &members {
            class_of[m as usize] = c as u32;
        }
        sizes.push(size);
        reps.push(rep);
        rep_orders.push(ord);
        members_out.push(members);
    }

    let inverse_class: Vec<usize> = (0..k)
        .map(|c| {
            let inv = elements[reps[c] as usize].inverse();
            class_of[index[&inv.images] as usize] as usize
        })
        .collect();

    let power_classes: Vec<Vec<usize>> = (0..k)
        .map(|c| {
            let g = &elements[reps[c] as usize];
            let mut cur = Permutation::identity(g.degree());
            (0..rep_orders[c])
                .map(|_| {
                    let cls = class_of[index[&cur.images] as usize] as usize;
                    cur = cur.compose(g);
                    cls
                })
                .collect()
        })
        .collect();

    ClassTable {
        class_of,
        sizes,
        reps,
        rep_orders,
        inverse_class,
        members: members_out,
        power_classes,
    }
}

impl Group {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements in canonical (BFS) order; `elements()[0]` is the identity.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    /// Index of `p` in the canonical order, if it belongs to the group.
    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(&p.images).map(|&i| i as usize)
    }

    pub fn classes(&self) -> &ClassTable {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.num_classes()
    }

    /// Exponent: lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        self.classes
            .rep_orders
            .iter()
            .fold(1u64, |acc, &o| acc.lcm(&o))
    }

    /// Distinct element orders, ascending.
    pub fn order_spectrum(&self) -> Vec<u64> {
        let mut s: Vec<u64> = self.classes.rep_orders.clone();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Class indices of the derived subgroup (it is a union of classes),
    /// computed as the normal closure of the generator commutators.
    pub fn derived_class_set(&self) -> Vec<usize> {
        let (_, derived) = derived_closure(self.degree, &self.generators);
        let mut classes: Vec<usize> = Vec::new();
        let mut covered = 0u64;
        for p in &derived {
            let c = self.classes.class_of(self.index[&p.images] as usize);
            if !classes.contains(&c) {
                classes.push(c);
                covered += self.classes.size(c);
            }
        }
        assert_eq!(
            covered,
            derived.len() as u64,
            "derived subgroup must be a union of classes"
        );
        classes.sort_unstable();
        classes
    }

    pub fn is_perfect(&self) -> bool {
        let derived = self.derived_class_set();
        let covered: u64 = derived.iter().map(|&c| self.classes.size(c)).sum();
        covered == self.order()
    }

    pub fn is_solvable(&self) -> bool {
        is_solvable_generated(self.degree, &self.generators)
    }

    /// Class indices of the solvable residual `G^(inf)` (the stable term of
    /// the derived series; trivial exactly when the group is solvable). It is
    /// characteristic, hence a union of classes. `G/N` is solvable if and
    /// only if `N` contains every residual class.
    pub fn residual_class_set(&self) -> Vec<usize> {
        let residual = perfect_residual_elements(self.degree, &self.generators);
        let mut classes: Vec<usize> = Vec::new();
        let mut covered = 0u64;
        for p in &residual {
            let c = self.classes.class_of(self.index[&p.images] as usize);
            if !classes.contains(&c) {
                classes.push(c);
                covered += self.classes.size(c);
            }
        }
        assert_eq!(
            covered,
            residual.len() as u64,
            "solvable residual must be a union of classes"
        );
        classes.sort_unstable();
        classes
    }
}

/// Greedy generator extraction: scan `candidates` in order, keep each one
/// that enlarges the generated subgroup. Returns the kept generators and the
/// elements of `<candidates>` in BFS order. At most `log2(order)` generators
/// survive, so the repeated closures stay cheap.
fn greedy_gens(
    degree: usize,
    candidates: &[Permutation],
) -> (Vec<Permutation>, Vec<Permutation>) {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut elements = vec![Permutation::identity(degree)];
    let mut current: BTreeMap<Vec<u16>, ()> =
        BTreeMap::from([(elements[0].images.clone(), ())]);
    for e in candidates {
        if current.contains_key(&e.images) {
            continue;
        }
        gens.push(e.clone());
        elements = close_under(degree, &[Permutation::identity(degree)], &gens, u64::MAX)
            .expect("no cap");
        current = elements.iter().map(|p| (p.images.clone(), ())).collect();
    }
    (gens, elements)
}

/// Derived subgroup of `<gens>`: generators and elements of the normal
/// closure of all generator-pair commutators.
fn derived_closure(
    degree: usize,
    gens: &[Permutation],
) -> (Vec<Permutation>, Vec<Permutation>) {
    let gen_invs: Vec<Permutation> = gens.iter().map(Permutation::inverse).collect();
    let mut seed: Vec<Permutation> = Vec::new();
    let mut seen: BTreeMap<Vec<u16>, ()> =
        BTreeMap::from([(Permutation::identity(degree).images, ())]);
    for (a, ai) in gens.iter().zip(&gen_invs) {
        for (b, bi) in gens.iter().zip(&gen_invs) {
            let comm = ai.compose(bi).compose(a).compose(b);
            if !seen.contains_key(&comm.images) {
                seen.insert(comm.images.clone(), ());
                seed.push(comm);
            }
        }
    }
    // Conjugation closure: the normal closure is generated by all conjugates
    // of the commutators, and conjugating by generators reaches every one.
    let mut head = 0usize;
    while head < seed.len() {
        let x = seed[head].clone();
        head += 1;
        for (g, gi) in gens.iter().zip(&gen_invs) {
            let conj = gi.compose(&x).compose(g);
            if !seen.contains_key(&conj.images) {
                seen.insert(conj.images.clone(), ());
                seed.push(conj);
            }
        }
    }
    greedy_gens(degree, &seed)
}

/// Small generating sequence for the subgroup given by its full element list.
pub fn reduce_generators(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let (gens, closure) = greedy_gens(degree, elements);
    debug_assert_eq!(closure.len(), elements.len(), "input must be a subgroup");
    gens
}

/// Solvability of `<gens>` by the derived series: repeat `H -> H'` until the
/// trivial group (solvable) or a perfect nontrivial term (not solvable).
fn is_solvable_generated(degree: usize, gens: &[Permutation]) -> bool {
    let mut gens = gens.to_vec();
    let mut prev_order = u64::MAX;
    loop {
        let (dgens, delems) = derived_closure(degree, &gens);
        let order = delems.len() as u64;
        if order == 1 {
            return true;
        }
        if order == prev_order {
            return false;
        }
        prev_order = order;
        gens = dgens;
    }
}

/// Solvability of the subgroup formed by an explicit element list.
pub fn is_solvable_elements(degree: usize, elements: &[Permutation]) -> bool {
    is_solvable_generated(degree, &reduce_generators(degree, elements))
}

/// Elements of the solvable residual of `<gens>`: the first repeated term of
/// the derived series (the trivial group for solvable input).
fn perfect_residual_elements(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let mut gens = gens.to_vec();
    let mut prev_order = u64::MAX;
    loop {
        let (dgens, delems) = derived_closure(degree, &gens);
        let order = delems.len() as u64;
        if order == 1 || order == prev_order {
            return delems;
        }
        prev_order = order;
        gens = dgens;
    }
}
