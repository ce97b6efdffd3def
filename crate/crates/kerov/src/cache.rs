//! On-disk Jack tables as JSON, one file per degree. Loaded tables are
//! certified again before use, so a stale or edited file is rejected rather
//! than trusted.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use kerov_core::field::{FieldElement, Poly, Rational};
use kerov_core::jack::{JackBook, JackTable};
use kerov_core::symfunc::TransitionTables;
use serde::{Deserialize, Serialize};

pub const CACHE_ENV: &str = "KEROV_CACHE_DIR";

/// `num/den`, each an ascending list of rational coefficients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StoredElement {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StoredTable {
    pub degree: usize,
    pub partitions: Vec<String>,
    pub p_rows: Vec<Vec<StoredElement>>,
}

fn poly_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn parse_poly(cs: &[String]) -> Option<Poly> {
    let coeffs = cs.iter().map(|c| c.parse::<Rational>().ok()).collect::<Option<Vec<_>>>()?;
    Some(Poly::from_coeffs(coeffs))
}

pub fn store_element(v: &FieldElement) -> StoredElement {
    StoredElement {
        num: poly_strings(v.numer()),
        den: poly_strings(v.denom()),
    }
}

pub fn load_element(s: &StoredElement) -> Option<FieldElement> {
    FieldElement::new(parse_poly(&s.num)?, parse_poly(&s.den)?).ok()
}

pub fn store_table(table: &JackTable) -> StoredTable {
    StoredTable {
        degree: table.degree(),
        partitions: table.partitions().iter().map(|p| p.to_string()).collect(),
        p_rows: table.p_rows().iter().map(|r| r.iter().map(store_element).collect()).collect(),
    }
}

/// `None` unless the file matches the expected layout and certifies.
pub fn load_table(stored: &StoredTable) -> Option<JackTable> {
    let tables = TransitionTables::new(stored.degree);
    let expected: Vec<String> = tables.partitions().iter().map(|p| p.to_string()).collect();
    if expected != stored.partitions {
        return None;
    }
    let rows = stored
        .p_rows
        .iter()
        .map(|r| r.iter().map(load_element).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    JackTable::from_p_rows(&tables, rows).ok()
}

#[derive(Debug, Clone)]
pub struct JackCache {
    dir: PathBuf,
}

impl JackCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        JackCache { dir: dir.into() }
    }

    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(Self::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, degree: usize) -> PathBuf {
        self.dir.join(format!("jack-{degree}.json"))
    }

    pub fn load(&self, degree: usize) -> Option<JackTable> {
        let text = fs::read_to_string(self.path(degree)).ok()?;
        let stored: StoredTable = serde_json::from_str(&text).ok()?;
        if stored.degree != degree {
            return None;
        }
        load_table(&stored)
    }

    pub fn store(&self, table: &JackTable) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let text = serde_json::to_string(&store_table(table)).map_err(io::Error::other)?;
        // write then rename so readers never see a partial file
        let tmp = self.path(table.degree()).with_extension("json.tmp");
        fs::write(&tmp, text)?;
        fs::rename(tmp, self.path(table.degree()))
    }
}

/// Builds `book` up to `degree`, reading and filling `cache` when given.
/// Cache write failures are ignored; the tables are still returned.
pub fn fill_book(book: &mut JackBook, degree: usize, cache: Option<&JackCache>) -> kerov_core::Result<()> {
    for n in 0..=degree.min(book.cap()) {
        if book.get(n).is_some() {
            continue;
        }
        if let Some(table) = cache.and_then(|c| c.load(n)) {
            book.insert(table)?;
            continue;
        }
        let table = book.ensure(n)?.clone();
        if let Some(c) = cache {
            let _ = c.store(&table);
        }
    }
    book.ensure_up_to(degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use kerov_core::partitions::Partition;

    #[test]
    fn round_trip_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let cache = JackCache::new(dir.path());
        let mut book = JackBook::default();
        fill_book(&mut book, 4, Some(&cache)).unwrap();
        assert!(dir.path().join("jack-4.json").exists());
        let loaded = cache.load(4).unwrap();
        assert_eq!(&loaded, book.get(4).unwrap());

        let mut fresh = JackBook::default();
        fill_book(&mut fresh, 4, Some(&cache)).unwrap();
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(fresh.theta_built(&p("2,2"), &p("2,2")).unwrap(), book.theta_built(&p("2,2"), &p("2,2")).unwrap());
    }

    #[test]
    fn tampered_file_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let cache = JackCache::new(dir.path());
        let mut book = JackBook::default();
        fill_book(&mut book, 3, Some(&cache)).unwrap();
        let path = dir.path().join("jack-3.json");
        let mut stored: StoredTable = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        stored.p_rows[0][0].num = vec!["5".into()];
        fs::write(&path, serde_json::to_string(&stored).unwrap()).unwrap();
        assert!(cache.load(3).is_none());
    }
}
