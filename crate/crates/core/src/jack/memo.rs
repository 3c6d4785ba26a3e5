//! Process-wide cache of constructed polynomials, optionally persisted as
//! one JSON file per entry.

use std::collections::HashMap;
use std::fs;
use std::path::Path;
use std::sync::{Arc, OnceLock, RwLock};

use crate::combinat::Composition;
use crate::error::{Error, Result};

use super::result::{JackKind, JackResult, Method};

/// Shifted polynomials are keyed by construction method so the
/// interpolation path never reads a Φ-built entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MemoKind {
    Nonsymmetric,
    Shifted(Method),
}

impl MemoKind {
    fn tag(self) -> &'static str {
        match self {
            MemoKind::Nonsymmetric => "xi",
            MemoKind::Shifted(Method::ViaPhi) => "e-phi",
            MemoKind::Shifted(Method::ViaInterpolation) => "e-interp",
        }
    }

    fn from_tag(tag: &str) -> Option<Self> {
        [
            MemoKind::Nonsymmetric,
            MemoKind::Shifted(Method::ViaPhi),
            MemoKind::Shifted(Method::ViaInterpolation),
        ]
        .into_iter()
        .find(|k| k.tag() == tag)
    }
}

type Key = (Composition, MemoKind);

#[derive(Default)]
pub struct Memo {
    map: RwLock<HashMap<Key, Arc<JackResult>>>,
}

impl Memo {
    pub fn global() -> &'static Memo {
        static MEMO: OnceLock<Memo> = OnceLock::new();
        MEMO.get_or_init(Memo::default)
    }

    pub fn get(&self, lambda: &Composition, kind: MemoKind) -> Option<Arc<JackResult>> {
        self.map.read().unwrap().get(&(lambda.clone(), kind)).cloned()
    }

    /// Inserts unless present; returns the stored entry either way.
    pub fn insert(&self, kind: MemoKind, value: JackResult) -> Arc<JackResult> {
        self.map
            .write()
            .unwrap()
            .entry((value.label.clone(), kind))
            .or_insert_with(|| Arc::new(value))
            .clone()
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Loads every entry file in `dir`; returns how many were added.
    pub fn load_dir(&self, dir: &Path) -> Result<usize> {
        let io = |e: std::io::Error| Error::Parse(format!("{}: {e}", dir.display()));
        if !dir.exists() {
            return Ok(0);
        }
        let mut added = 0;
        for entry in fs::read_dir(dir).map_err(io)? {
            let path = entry.map_err(io)?.path();
            let Some(stem) = path.file_stem().and_then(|s| s.to_str()) else {
                continue;
            };
            let Some(kind) = stem.split('_').next().and_then(MemoKind::from_tag) else {
                continue;
            };
            let value = JackResult::from_json_str(&fs::read_to_string(&path).map_err(io)?)?;
            let expected = match kind {
                MemoKind::Nonsymmetric => JackKind::Nonsymmetric,
                MemoKind::Shifted(_) => JackKind::Shifted,
            };
            if value.kind != expected {
                return Err(Error::Parse(format!("{}: kind does not match file name", path.display())));
            }
            if self.get(&value.label, kind).is_none() {
                added += 1;
            }
            self.insert(kind, value);
        }
        Ok(added)
    }

    /// Writes every entry to `dir`, one file per key.
    pub fn save_dir(&self, dir: &Path) -> Result<()> {
        let io = |e: std::io::Error| Error::Parse(format!("{}: {e}", dir.display()));
        fs::create_dir_all(dir).map_err(io)?;
        for ((lambda, kind), value) in self.map.read().unwrap().iter() {
            let parts: Vec<String> = lambda.parts().iter().map(u16::to_string).collect();
            let path = dir.join(format!("{}_{}.json", kind.tag(), parts.join("-")));
            fs::write(&path, value.to_json_value().to_string()).map_err(io)?;
        }
        Ok(())
    }
}
