//! Columnar dataset with typed columns, role assignments and CSV ingestion.
//!
//! Rows containing missing values are rejected at ingestion so every
//! downstream computation can assume complete numeric data.

use std::collections::{HashMap, HashSet};
use std::path::Path;

use ndarray::{Array2, Axis};

use crate::error::{Error, Result};
use crate::family::Family;

#[derive(Debug, Clone)]
pub enum ColumnData {
    Numeric(Vec<f64>),
    Categorical {
        /// Level index per row, each in [0, levels.len()).
        indices: Vec<usize>,
        /// Level names in first-observed order; index 0 is the reference.
        levels: Vec<String>,
    },
}

#[derive(Debug, Clone)]
pub struct Column {
    pub name: String,
    pub data: ColumnData,
}

impl Column {
    pub fn numeric(name: impl Into<String>, values: Vec<f64>) -> Column {
        Column {
            name: name.into(),
            data: ColumnData::Numeric(values),
        }
    }

    /// Builds the level table in first-observed order.
    pub fn categorical(name: impl Into<String>, values: &[&str]) -> Column {
        let mut levels: Vec<String> = Vec::new();
        let mut seen: HashMap<&str, usize> = HashMap::new();
        let mut indices = Vec::with_capacity(values.len());
        for &v in values {
            let idx = *seen.entry(v).or_insert_with(|| {
                levels.push(v.to_string());
                levels.len() - 1
            });
            indices.push(idx);
        }
        Column {
            name: name.into(),
            data: ColumnData::Categorical { indices, levels },
        }
    }

    pub fn len(&self) -> usize {
        match &self.data {
            ColumnData::Numeric(v) => v.len(),
            ColumnData::Categorical { indices, .. } => indices.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_numeric(&self) -> bool {
        matches!(self.data, ColumnData::Numeric(_))
    }

    pub fn as_numeric(&self) -> Option<&[f64]> {
        match &self.data {
            ColumnData::Numeric(v) => Some(v),
            ColumnData::Categorical { .. } => None,
        }
    }

    pub fn as_categorical(&self) -> Option<(&[usize], &[String])> {
        match &self.data {
            ColumnData::Numeric(_) => None,
            ColumnData::Categorical { indices, levels } => Some((indices, levels)),
        }
    }

    fn take_rows(&self, rows: &[usize]) -> Column {
        let data = match &self.data {
            ColumnData::Numeric(v) => ColumnData::Numeric(rows.iter().map(|&i| v[i]).collect()),
            ColumnData::Categorical { indices, levels } => ColumnData::Categorical {
                indices: rows.iter().map(|&i| indices[i]).collect(),
                levels: levels.clone(),
            },
        };
        Column {
            name: self.name.clone(),
            data,
        }
    }
}

/// Immutable columnar table. All columns share one length.
#[derive(Debug, Clone)]
pub struct Dataset {
    columns: Vec<Column>,
    n: usize,
}

impl Dataset {
    pub fn new(columns: Vec<Column>) -> Result<Dataset> {
        let n = columns.first().map_or(0, Column::len);
        if n == 0 {
            return Err(Error::EmptyDataset { rejected: 0 });
        }
        for c in &columns {
            if c.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: c.len(),
                });
            }
        }
        Ok(Dataset { columns, n })
    }

    pub fn n_rows(&self) -> usize {
        self.n
    }

    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn column_names(&self) -> Vec<&str> {
        self.columns.iter().map(|c| c.name.as_str()).collect()
    }

    pub fn column(&self, name: &str) -> Result<&Column> {
        self.columns
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| Error::MissingColumn(name.to_string()))
    }

    pub fn numeric_column(&self, name: &str) -> Result<&[f64]> {
        let col = self.column(name)?;
        col.as_numeric().ok_or_else(|| Error::ColumnType {
            name: name.to_string(),
            expected: "numeric",
            found: "categorical",
        })
    }

    /// Copies the given rows (in order, repeats allowed) into a new table.
    pub fn take_rows(&self, rows: &[usize]) -> Result<Dataset> {
        if rows.is_empty() {
            return Err(Error::EmptyDataset { rejected: 0 });
        }
        Ok(Dataset {
            columns: self.columns.iter().map(|c| c.take_rows(rows)).collect(),
            n: rows.len(),
        })
    }
}

/// Which columns play which part in the model.
#[derive(Debug, Clone)]
pub struct RoleSpec {
    pub response: String,
    /// Subgroup-wise varying regressors; an intercept column is implied
    /// when `intercept` is set.
    pub varying: Vec<String>,
    pub intercept: bool,
    /// Regressors with one global coefficient vector.
    pub fixed: Vec<String>,
    /// Candidate partitioning variables.
    pub split_vars: Vec<String>,
    pub family: Family,
    pub allow_overlap: bool,
}

impl RoleSpec {
    pub fn new(
        response: impl Into<String>,
        varying: Vec<String>,
        fixed: Vec<String>,
        split_vars: Vec<String>,
        family: Family,
    ) -> RoleSpec {
        RoleSpec {
            response: response.into(),
            varying,
            intercept: true,
            fixed,
            split_vars,
            family,
            allow_overlap: false,
        }
    }

    /// All referenced columns must exist; the response must be numeric and
    /// inside the family domain; the three regressor roles must be disjoint
    /// unless overlap is explicitly allowed.
    pub fn validate(&self, ds: &Dataset) -> Result<()> {
        for name in self
            .varying
            .iter()
            .chain(&self.fixed)
            .chain(&self.split_vars)
            .chain(std::iter::once(&self.response))
        {
            ds.column(name)?;
        }
        let y = ds.numeric_column(&self.response)?;
        let bad = self.family.check_response(y);
        if !bad.is_empty() {
            return Err(Error::ResponseDomain {
                column: self.response.clone(),
                family: self.family.name(),
                // 1-based, matching the CSV reader's row numbering.
                rows: bad.iter().map(|i| i + 1).collect(),
            });
        }
        for role in [&self.varying, &self.fixed, &self.split_vars] {
            if role.iter().any(|c| *c == self.response) {
                return Err(Error::RoleOverlap(self.response.clone()));
            }
        }
        if !self.allow_overlap {
            let mut seen: HashSet<&str> = HashSet::new();
            for name in self.varying.iter().chain(&self.fixed).chain(&self.split_vars) {
                if !seen.insert(name) {
                    return Err(Error::RoleOverlap(name.clone()));
                }
            }
        }
        Ok(())
    }
}

/// Forced column type for ingestion; unhinted columns are inferred
/// (numeric when every kept cell parses as a float).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColumnKind {
    Numeric,
    Categorical,
}

#[derive(Debug, Clone, Copy)]
pub struct CsvReport {
    pub n_rows: usize,
    pub n_cols: usize,
    pub rejected_rows: usize,
}

fn is_missing(cell: &str) -> bool {
    let t = cell.trim();
    t.is_empty() || t.eq_ignore_ascii_case("na") || t.eq_ignore_ascii_case("n/a") || t.eq_ignore_ascii_case("nan")
}

/// Reads a comma-separated file with a header row. Rows with any missing
/// cell are rejected and counted in the report. Every column named in the
/// spec must appear in the header.
pub fn read_csv(
    path: impl AsRef<Path>,
    spec: &RoleSpec,
    hints: &HashMap<String, ColumnKind>,
) -> Result<(Dataset, CsvReport)> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(file);
    let headers: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();

    for name in spec
        .varying
        .iter()
        .chain(&spec.fixed)
        .chain(&spec.split_vars)
        .chain(std::iter::once(&spec.response))
    {
        if !headers.contains(name) {
            return Err(Error::MissingColumn(name.clone()));
        }
    }

    let mut records: Vec<csv::StringRecord> = Vec::new();
    for rec in reader.records() {
        records.push(rec?);
    }

    // Pass 1: drop rows with missing cells, remembering original positions.
    let mut kept: Vec<usize> = Vec::new();
    for (i, rec) in records.iter().enumerate() {
        if rec.iter().all(|cell| !is_missing(cell)) {
            kept.push(i);
        }
    }
    let rejected = records.len() - kept.len();
    if kept.is_empty() {
        return Err(Error::EmptyDataset { rejected });
    }

    // Pass 2: decide each column's type, then materialize.
    let mut columns = Vec::with_capacity(headers.len());
    for (j, name) in headers.iter().enumerate() {
        let kind = match hints.get(name) {
            Some(&k) => k,
            None => {
                let numeric = kept
                    .iter()
                    .all(|&i| records[i].get(j).is_some_and(|c| c.trim().parse::<f64>().is_ok()));
                if numeric {
                    ColumnKind::Numeric
                } else {
                    ColumnKind::Categorical
                }
            }
        };
        match kind {
            ColumnKind::Numeric => {
                let mut values = Vec::with_capacity(kept.len());
                for &i in &kept {
                    let cell = records[i].get(j).unwrap_or("");
                    let v: f64 = cell.trim().parse().map_err(|_| Error::ParseCell {
                        row: i + 1,
                        column: name.clone(),
                        value: cell.to_string(),
                    })?;
                    if !v.is_finite() {
                        return Err(Error::ParseCell {
                            row: i + 1,
                            column: name.clone(),
                            value: cell.to_string(),
                        });
                    }
                    values.push(v);
                }
                columns.push(Column::numeric(name.clone(), values));
            }
            ColumnKind::Categorical => {
                let raw: Vec<&str> = kept.iter().map(|&i| records[i].get(j).unwrap_or("")).collect();
                columns.push(Column::categorical(name.clone(), &raw));
            }
        }
    }

    let ds = Dataset::new(columns).map_err(|e| match e {
        Error::EmptyDataset { .. } => Error::EmptyDataset { rejected },
        other => other,
    })?;
    let report = CsvReport {
        n_rows: ds.n_rows(),
        n_cols: ds.n_cols(),
        rejected_rows: rejected,
    };
    Ok((ds, report))
}

/// Numeric model matrix with named columns. Categorical columns expand to
/// L-1 treatment-contrast indicators against the first level.
#[derive(Debug, Clone)]
pub struct Design {
    pub matrix: Array2<f64>,
    pub names: Vec<String>,
}

impl Design {
    pub fn n_cols(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn rows(&self, rows: &[usize]) -> Design {
        Design {
            matrix: self.matrix.select(Axis(0), rows),
            names: self.names.clone(),
        }
    }
}

pub fn design_matrix(ds: &Dataset, cols: &[String], intercept: bool) -> Result<Design> {
    let n = ds.n_rows();
    let mut names: Vec<String> = Vec::new();
    let mut data: Vec<Vec<f64>> = Vec::new();
    if intercept {
        names.push("(intercept)".to_string());
        data.push(vec![1.0; n]);
    }
    for name in cols {
        match &ds.column(name)?.data {
            ColumnData::Numeric(v) => {
                names.push(name.clone());
                data.push(v.clone());
            }
            ColumnData::Categorical { indices, levels } => {
                for (l, level) in levels.iter().enumerate().skip(1) {
                    names.push(format!("{name}={level}"));
                    data.push(indices.iter().map(|&ix| if ix == l { 1.0 } else { 0.0 }).collect());
                }
            }
        }
    }
    let k = data.len();
    let mut matrix = Array2::zeros((n, k));
    for (j, col) in data.iter().enumerate() {
        for (i, &v) in col.iter().enumerate() {
            matrix[[i, j]] = v;
        }
    }
    Ok(Design { matrix, names })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy() -> Dataset {
        Dataset::new(vec![
            Column::numeric("y", vec![1.0, 2.0, 3.0]),
            Column::numeric("xa", vec![0.0, 1.0, 1.0]),
            Column::categorical("g", &["a", "b", "a"]),
        ])
        .unwrap()
    }

    #[test]
    fn categorical_level_order() {
        let ds = toy();
        let (idx, levels) = ds.column("g").unwrap().as_categorical().unwrap();
        assert_eq!(levels, &["a".to_string(), "b".to_string()]);
        assert_eq!(idx, &[0, 1, 0]);
    }

    #[test]
    fn intercept_only_design() {
        let ds = toy();
        let d = design_matrix(&ds, &[], true).unwrap();
        assert_eq!(d.matrix.shape(), &[3, 1]);
        assert!(d.matrix.iter().all(|&v| v == 1.0));
        assert_eq!(d.names, vec!["(intercept)"]);
    }

    #[test]
    fn contrast_expansion() {
        let ds = Dataset::new(vec![Column::categorical("g", &["a", "b", "c", "b"])]).unwrap();
        let d = design_matrix(&ds, &["g".to_string()], true).unwrap();
        assert_eq!(d.names, vec!["(intercept)", "g=b", "g=c"]);
        assert_eq!(d.matrix.column(1).to_vec(), vec![0.0, 1.0, 0.0, 1.0]);
        assert_eq!(d.matrix.column(2).to_vec(), vec![0.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn numeric_design_rows() {
        let ds = toy();
        let d = design_matrix(&ds, &["xa".to_string()], true).unwrap();
        assert_eq!(d.matrix.row(0).to_vec(), vec![1.0, 0.0]);
        assert_eq!(d.matrix.row(1).to_vec(), vec![1.0, 1.0]);
        assert_eq!(d.matrix.row(2).to_vec(), vec![1.0, 1.0]);
    }

    #[test]
    fn overlap_rejected_unless_allowed() {
        let ds = toy();
        let mut spec = RoleSpec::new(
            "y",
            vec!["xa".to_string()],
            vec![],
            vec!["xa".to_string()],
            Family::Gaussian,
        );
        assert!(matches!(spec.validate(&ds), Err(Error::RoleOverlap(_))));
        spec.allow_overlap = true;
        spec.validate(&ds).unwrap();
    }

    #[test]
    fn response_domain_checked() {
        let ds = toy();
        let spec = RoleSpec::new("y", vec!["xa".to_string()], vec![], vec![], Family::Binomial);
        match spec.validate(&ds) {
            Err(Error::ResponseDomain { rows, .. }) => assert_eq!(rows, vec![2, 3]),
            other => panic!("expected domain error, got {other:?}"),
        }
    }
}
