//! The bundled corpus: every projective family member within the default
//! order cap plus a spread of small groups for negative controls and
//! lemma-condition diversity.

/// Where a corpus entry comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// A family-spec string such as `psl2:8`.
    Family(&'static str),
    /// A bundled generator file (name, contents).
    Bundled(&'static str, &'static str),
}

#[derive(Debug, Clone, Copy)]
pub struct CorpusEntry {
    pub id: &'static str,
    pub source: Source,
    /// Known order, double-checked when the entry is constructed.
    pub expected_order: u64,
}

macro_rules! bundled {
    ($id:literal, $file:literal, $order:literal) => {
        CorpusEntry {
            id: $id,
            source: Source::Bundled($file, include_str!(concat!("../gens/", $file))),
            expected_order: $order,
        }
    };
}

macro_rules! family {
    ($id:literal, $order:literal) => {
        CorpusEntry {
            id: $id,
            source: Source::Family($id),
            expected_order: $order,
        }
    };
}

/// The default corpus, in fixed manifest order.
pub const CORPUS: &[CorpusEntry] = &[
    family!("psl2:4", 60),
    family!("psl2:5", 60),
    family!("psl2:7", 168),
    family!("psl2:8", 504),
    family!("psl2:9", 360),
    family!("psl2:11", 660),
    family!("psl2:13", 1092),
    family!("psl2:16", 4080),
    family!("pgl2:5", 120),
    family!("pgl2:7", 336),
    family!("pgl2:9", 720),
    family!("pgl2:11", 1320),
    family!("pgl2:13", 2184),
    family!("sl2:3", 24),
    family!("sl2:5", 120),
    family!("sl2:7", 336),
    family!("sl2:9", 720),
    family!("psigmal2:9", 720),
    family!("pgammal2:8", 1512),
    family!("pgammal2:9", 1440),
    family!("m10", 720),
    bundled!("c2", "c2.gens", 2),
    bundled!("c6", "c6.gens", 6),
    bundled!("s3", "s3.gens", 6),
    bundled!("s4", "s4.gens", 24),
    bundled!("s5", "s5.gens", 120),
    bundled!("a4", "a4.gens", 12),
    bundled!("d8", "d8.gens", 8),
    bundled!("q8", "q8.gens", 8),
    bundled!("sl2_3_file", "sl2_3.gens", 24),
    bundled!("psl2_4xc2", "psl2_4xc2.gens", 120),
    bundled!("frob20", "frob20.gens", 20),
];

/// The opt-in extra member `L2(32)`; large enough to be excluded from the
/// default sweep.
pub const L2_32: CorpusEntry = family!("psl2:32", 32736);

pub fn corpus(include_l2_32: bool) -> Vec<CorpusEntry> {
    let mut entries = CORPUS.to_vec();
    if include_l2_32 {
        entries.push(L2_32);
    }
    entries
}

pub fn find(id: &str) -> Option<CorpusEntry> {
    corpus(true).into_iter().find(|e| e.id == id)
}
