//! Sparse document-term storage, file ingestion, frequency computation, and
//! collapsing of counts by response level.
//!
//! Corpus files are triplet TSV: a header line `#docs\t<n>\t#vocab\t<p>`
//! followed by `doc\tword\tcount` rows. Responses ship in a sidecar TSV of
//! `doc\ty` rows. Lines starting with `#` (other than the header) are
//! comments.

use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::error::{MnirError, Result};
use crate::scalar::{real, real_count, Scalar};

/// Supported corpus file formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFormat {
    TripletTsv,
}

/// Documents-by-vocabulary count matrix in compressed row form, with
/// per-document totals and optional responses.
///
/// Invariants enforced at construction: counts are strictly positive (zeros
/// are never stored), indices are in bounds, no `(doc, word)` pair repeats,
/// and every document has a positive total.
#[derive(Debug, Clone)]
pub struct SparseCorpus<T: Scalar> {
    n_docs: usize,
    vocab_size: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
    counts: Vec<u64>,
    doc_totals: Vec<u64>,
    responses: Option<Vec<T>>,
    vocab_labels: Option<Vec<String>>,
}

impl<T: Scalar> SparseCorpus<T> {
    /// Builds a corpus from `(doc, word, count)` triplets, validating every
    /// structural invariant. Triplets may arrive in any order.
    pub fn from_triplets(
        n_docs: usize,
        vocab_size: usize,
        triplets: &[(usize, usize, u64)],
        responses: Option<Vec<T>>,
    ) -> Result<Self> {
        let mut entries: Vec<(usize, usize, u64)> = Vec::with_capacity(triplets.len());
        for &(doc, word, count) in triplets {
            if count == 0 {
                return Err(MnirError::InvalidCorpus(format!(
                    "zero count stored explicitly at (doc {doc}, word {word})"
                )));
            }
            if doc >= n_docs {
                return Err(MnirError::InvalidCorpus(format!(
                    "doc index {doc} out of bounds (n_docs = {n_docs})"
                )));
            }
            if word >= vocab_size {
                return Err(MnirError::InvalidCorpus(format!(
                    "word index {word} out of bounds (vocab_size = {vocab_size})"
                )));
            }
            entries.push((doc, word, count));
        }
        entries.sort_unstable_by_key(|&(d, w, _)| (d, w));
        for pair in entries.windows(2) {
            if pair[0].0 == pair[1].0 && pair[0].1 == pair[1].1 {
                return Err(MnirError::InvalidCorpus(format!(
                    "duplicate entry for (doc {}, word {})",
                    pair[0].0, pair[0].1
                )));
            }
        }

        let mut row_ptr = vec![0usize; n_docs + 1];
        let mut col_idx = Vec::with_capacity(entries.len());
        let mut counts = Vec::with_capacity(entries.len());
        let mut doc_totals = vec![0u64; n_docs];
        for &(doc, word, count) in &entries {
            row_ptr[doc + 1] += 1;
            col_idx.push(word);
            counts.push(count);
            doc_totals[doc] += count;
        }
        for i in 0..n_docs {
            row_ptr[i + 1] += row_ptr[i];
        }
        for (i, &m) in doc_totals.iter().enumerate() {
            if m == 0 {
                return Err(MnirError::InvalidCorpus(format!(
                    "document {i} has zero total words; its frequency projection is undefined"
                )));
            }
        }
        if let Some(ref y) = responses {
            if y.len() != n_docs {
                return Err(MnirError::DimensionMismatch(format!(
                    "{} responses for {} documents",
                    y.len(),
                    n_docs
                )));
            }
        }

        Ok(Self {
            n_docs,
            vocab_size,
            row_ptr,
            col_idx,
            counts,
            doc_totals,
            responses,
            vocab_labels: None,
        })
    }

    pub fn n_docs(&self) -> usize {
        self.n_docs
    }

    pub fn vocab_size(&self) -> usize {
        self.vocab_size
    }

    /// Per-document word totals `m_i`.
    pub fn doc_totals(&self) -> &[u64] {
        &self.doc_totals
    }

    /// Grand total `M`, the number of words in the corpus.
    pub fn total_count(&self) -> u64 {
        self.doc_totals.iter().sum()
    }

    /// Sparse row `i` as parallel `(word indices, counts)` slices.
    pub fn row(&self, i: usize) -> (&[usize], &[u64]) {
        let lo = self.row_ptr[i];
        let hi = self.row_ptr[i + 1];
        (&self.col_idx[lo..hi], &self.counts[lo..hi])
    }

    /// Iterates all stored `(doc, word, count)` entries in row order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        (0..self.n_docs).flat_map(move |i| {
            let (words, counts) = self.row(i);
            words
                .iter()
                .zip(counts.iter())
                .map(move |(&w, &c)| (i, w, c))
        })
    }

    pub fn responses(&self) -> Option<&[T]> {
        self.responses.as_deref()
    }

    /// Responses, or an error naming the operation that needs them.
    pub fn responses_required(&self, what: &str) -> Result<&[T]> {
        self.responses
            .as_deref()
            .ok_or_else(|| MnirError::Invalid(format!("{what} requires document responses")))
    }

    pub fn set_responses(&mut self, responses: Option<Vec<T>>) -> Result<()> {
        if let Some(ref y) = responses {
            if y.len() != self.n_docs {
                return Err(MnirError::DimensionMismatch(format!(
                    "{} responses for {} documents",
                    y.len(),
                    self.n_docs
                )));
            }
        }
        self.responses = responses;
        Ok(())
    }

    pub fn vocab_labels(&self) -> Option<&[String]> {
        self.vocab_labels.as_deref()
    }

    pub fn set_vocab_labels(&mut self, labels: Option<Vec<String>>) -> Result<()> {
        if let Some(ref l) = labels {
            if l.len() != self.vocab_size {
                return Err(MnirError::DimensionMismatch(format!(
                    "{} labels for {} words",
                    l.len(),
                    self.vocab_size
                )));
            }
        }
        self.vocab_labels = labels;
        Ok(())
    }

    /// Column totals over all documents.
    pub fn column_sums(&self) -> Vec<u64> {
        let mut sums = vec![0u64; self.vocab_size];
        for (_, w, c) in self.entries() {
            sums[w] += c;
        }
        sums
    }

    /// Number of documents containing each word.
    pub fn doc_frequencies(&self) -> Vec<usize> {
        let mut df = vec![0usize; self.vocab_size];
        for (_, w, _) in self.entries() {
            df[w] += 1;
        }
        df
    }
}

/// Group-wise column sums of a binary-response corpus.
#[derive(Debug, Clone)]
pub struct CollapsedCounts<T: Scalar> {
    c0: Vec<u64>,
    c1: Vec<u64>,
    c0_total: u64,
    c1_total: u64,
    n_docs: usize,
    n_docs_y1: usize,
    pi_hat: T,
}

impl<T: Scalar> CollapsedCounts<T> {
    /// Builds collapsed counts directly from group-wise column sums.
    /// Used by the simulation lab and by tests with hand-built counts.
    pub fn from_group_sums(c0: Vec<u64>, c1: Vec<u64>, n_docs: usize, n_docs_y1: usize) -> Result<Self> {
        if c0.len() != c1.len() {
            return Err(MnirError::DimensionMismatch(format!(
                "group sums of lengths {} and {}",
                c0.len(),
                c1.len()
            )));
        }
        if n_docs_y1 == 0 || n_docs_y1 >= n_docs {
            return Err(MnirError::DegenerateGrouping(format!(
                "{n_docs_y1} of {n_docs} documents have y = 1; both groups must be nonempty"
            )));
        }
        let c0_total = c0.iter().sum();
        let c1_total = c1.iter().sum();
        let pi_hat = real::<T>(n_docs_y1 as f64) / real::<T>(n_docs as f64);
        Ok(Self {
            c0,
            c1,
            c0_total,
            c1_total,
            n_docs,
            n_docs_y1,
            pi_hat,
        })
    }

    pub fn vocab_size(&self) -> usize {
        self.c0.len()
    }

    /// Column sums over documents with `y = 0`.
    pub fn c0(&self) -> &[u64] {
        &self.c0
    }

    /// Column sums over documents with `y = 1`.
    pub fn c1(&self) -> &[u64] {
        &self.c1
    }

    pub fn c0_total(&self) -> u64 {
        self.c0_total
    }

    pub fn c1_total(&self) -> u64 {
        self.c1_total
    }

    pub fn total(&self) -> u64 {
        self.c0_total + self.c1_total
    }

    pub fn n_docs(&self) -> usize {
        self.n_docs
    }

    pub fn n_docs_y1(&self) -> usize {
        self.n_docs_y1
    }

    /// Fraction of documents with `y = 1`.
    pub fn pi_hat(&self) -> T {
        self.pi_hat
    }

    pub fn word_total(&self, j: usize) -> u64 {
        self.c0[j] + self.c1[j]
    }

    /// Index of the word with the largest total count, the default baseline.
    pub fn largest_total_word(&self) -> usize {
        let mut best = 0usize;
        let mut best_total = 0u64;
        for j in 0..self.vocab_size() {
            let t = self.word_total(j);
            if t > best_total {
                best = j;
                best_total = t;
            }
        }
        best
    }
}

/// Sums counts column-wise within each response group.
///
/// Requires binary responses with both groups nonempty.
pub fn collapse<T: Scalar>(corpus: &SparseCorpus<T>) -> Result<CollapsedCounts<T>> {
    let responses = corpus.responses_required("collapse")?;
    let mut group = Vec::with_capacity(responses.len());
    for (i, &y) in responses.iter().enumerate() {
        if y == T::zero() {
            group.push(false);
        } else if y == T::one() {
            group.push(true);
        } else {
            return Err(MnirError::Invalid(format!(
                "collapse requires binary responses; document {i} has y = {}",
                y.to_f64()
            )));
        }
    }
    let n1 = group.iter().filter(|&&g| g).count();
    if n1 == 0 || n1 == corpus.n_docs() {
        return Err(MnirError::DegenerateGrouping(format!(
            "{n1} of {} documents have y = 1; both groups must be nonempty",
            corpus.n_docs()
        )));
    }
    let mut c0 = vec![0u64; corpus.vocab_size()];
    let mut c1 = vec![0u64; corpus.vocab_size()];
    for (doc, word, count) in corpus.entries() {
        if group[doc] {
            c1[word] += count;
        } else {
            c0[word] += count;
        }
    }
    CollapsedCounts::from_group_sums(c0, c1, corpus.n_docs(), n1)
}

/// Mean-shifted frequency matrix, stored as the sparse frequency part plus a
/// shared dense offset so the projection stays `O(nnz + p)`.
///
/// Row `i` is `f_i = x_i / m_i - fbar` where `fbar` is the mean frequency
/// vector over documents. Row sums and column means are identically zero.
#[derive(Debug, Clone)]
pub struct FreqMatrix<T: Scalar> {
    n_docs: usize,
    vocab_size: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<usize>,
    values: Vec<T>,
    fbar: Vec<T>,
}

impl<T: Scalar> FreqMatrix<T> {
    pub fn n_docs(&self) -> usize {
        self.n_docs
    }

    pub fn vocab_size(&self) -> usize {
        self.vocab_size
    }

    /// The dense mean-frequency offset shared by every row.
    pub fn fbar(&self) -> &[T] {
        &self.fbar
    }

    /// Projects every document onto a single loading vector: `z_i = phi' f_i`.
    pub fn project(&self, phi: &[T]) -> Result<Vec<T>> {
        if phi.len() != self.vocab_size {
            return Err(MnirError::DimensionMismatch(format!(
                "loading vector of length {} against vocabulary of {}",
                phi.len(),
                self.vocab_size
            )));
        }
        let mut offset = T::zero();
        for (p, f) in phi.iter().zip(self.fbar.iter()) {
            offset += *p * *f;
        }
        let mut z = Vec::with_capacity(self.n_docs);
        for i in 0..self.n_docs {
            let lo = self.row_ptr[i];
            let hi = self.row_ptr[i + 1];
            let mut dot = T::zero();
            for k in lo..hi {
                dot += phi[self.col_idx[k]] * self.values[k];
            }
            z.push(dot - offset);
        }
        Ok(z)
    }

    /// Projects onto several loading columns at once; returns one projection
    /// vector per column.
    pub fn project_columns(&self, columns: &[Vec<T>]) -> Result<Vec<Vec<T>>> {
        columns.iter().map(|c| self.project(c)).collect()
    }

    /// Writes row `i` (`f_i`) densely into `buf`.
    pub fn row_dense(&self, i: usize, buf: &mut [T]) {
        buf.copy_from_slice(&self.fbar);
        for v in buf.iter_mut() {
            *v = -*v;
        }
        let lo = self.row_ptr[i];
        let hi = self.row_ptr[i + 1];
        for k in lo..hi {
            buf[self.col_idx[k]] += self.values[k];
        }
    }

    /// Materializes the full matrix; intended for desk-scale baselines.
    pub fn to_dense(&self) -> nalgebra::DMatrix<T> {
        let mut m = nalgebra::DMatrix::<T>::zeros(self.n_docs, self.vocab_size);
        let mut buf = vec![T::zero(); self.vocab_size];
        for i in 0..self.n_docs {
            self.row_dense(i, &mut buf);
            for j in 0..self.vocab_size {
                m[(i, j)] = buf[j];
            }
        }
        m
    }
}

/// Computes mean-shifted frequencies `f_i = x_i/m_i - (1/n) sum_k x_k/m_k`.
pub fn mean_shift_frequencies<T: Scalar>(corpus: &SparseCorpus<T>) -> Result<FreqMatrix<T>> {
    if corpus.n_docs() == 0 {
        return Err(MnirError::Invalid(
            "mean-shifted frequencies are undefined for an empty corpus".into(),
        ));
    }
    let n = corpus.n_docs();
    let p = corpus.vocab_size();
    let inv_n = T::one() / real::<T>(n as f64);
    let mut fbar = vec![T::zero(); p];
    let mut row_ptr = Vec::with_capacity(n + 1);
    let mut col_idx = Vec::new();
    let mut values = Vec::new();
    row_ptr.push(0);
    for i in 0..n {
        let m = real_count::<T>(corpus.doc_totals()[i]);
        let (words, counts) = corpus.row(i);
        for (&w, &c) in words.iter().zip(counts.iter()) {
            let freq = real_count::<T>(c) / m;
            fbar[w] += freq * inv_n;
            col_idx.push(w);
            values.push(freq);
        }
        row_ptr.push(col_idx.len());
    }
    Ok(FreqMatrix {
        n_docs: n,
        vocab_size: p,
        row_ptr,
        col_idx,
        values,
        fbar,
    })
}

fn io_err(path: &Path, source: std::io::Error) -> MnirError {
    MnirError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn parse_err(path: &Path, line: usize, msg: impl Into<String>) -> MnirError {
    MnirError::Parse {
        path: path.display().to_string(),
        line,
        msg: msg.into(),
    }
}

fn parse_field<F: std::str::FromStr>(
    path: &Path,
    line: usize,
    field: &str,
    what: &str,
) -> Result<F> {
    field
        .trim()
        .parse::<F>()
        .map_err(|_| parse_err(path, line, format!("cannot parse {what} from {field:?}")))
}

/// Loads a triplet-TSV corpus, optionally attaching a response sidecar.
///
/// Document totals are recomputed from the entries; all structural
/// invariants are checked before the corpus is returned.
pub fn load_corpus<T: Scalar>(
    path: impl AsRef<Path>,
    format: CorpusFormat,
    responses_path: Option<&Path>,
) -> Result<SparseCorpus<T>> {
    let CorpusFormat::TripletTsv = format;
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|e| io_err(path, e))?;
    let reader = BufReader::new(file);

    let mut header: Option<(usize, usize)> = None;
    let mut triplets: Vec<(usize, usize, u64)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| io_err(path, e))?;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        if line.starts_with("#docs") && header.is_none() {
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 4 || fields[2] != "#vocab" {
                return Err(parse_err(
                    path,
                    lineno,
                    "header must be `#docs\\t<n>\\t#vocab\\t<p>`",
                ));
            }
            let n: usize = parse_field(path, lineno, fields[1], "document count")?;
            let p: usize = parse_field(path, lineno, fields[3], "vocabulary size")?;
            header = Some((n, p));
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        if header.is_none() {
            return Err(parse_err(path, lineno, "missing `#docs` header line"));
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 {
            return Err(parse_err(
                path,
                lineno,
                format!("expected `doc\\tword\\tcount`, got {} fields", fields.len()),
            ));
        }
        let doc: usize = parse_field(path, lineno, fields[0], "doc index")?;
        let word: usize = parse_field(path, lineno, fields[1], "word index")?;
        let count: u64 = parse_field(path, lineno, fields[2], "count")?;
        triplets.push((doc, word, count));
    }
    let (n_docs, vocab_size) =
        header.ok_or_else(|| parse_err(path, 1, "missing `#docs` header line"))?;

    let responses = match responses_path {
        Some(rp) => Some(load_responses::<T>(rp, n_docs)?),
        None => None,
    };
    SparseCorpus::from_triplets(n_docs, vocab_size, &triplets, responses)
}

/// Loads a `doc\ty` response sidecar covering every document exactly once.
pub fn load_responses<T: Scalar>(path: impl AsRef<Path>, n_docs: usize) -> Result<Vec<T>> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|e| io_err(path, e))?;
    let reader = BufReader::new(file);
    let mut seen = vec![false; n_docs];
    let mut values = vec![T::zero(); n_docs];
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| io_err(path, e))?;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 2 {
            return Err(parse_err(
                path,
                lineno,
                format!("expected `doc\\ty`, got {} fields", fields.len()),
            ));
        }
        let doc: usize = parse_field(path, lineno, fields[0], "doc index")?;
        let y: f64 = parse_field(path, lineno, fields[1], "response")?;
        if doc >= n_docs {
            return Err(parse_err(
                path,
                lineno,
                format!("doc index {doc} out of bounds (n_docs = {n_docs})"),
            ));
        }
        if seen[doc] {
            return Err(parse_err(path, lineno, format!("duplicate response for doc {doc}")));
        }
        if !y.is_finite() {
            return Err(parse_err(path, lineno, "non-finite response"));
        }
        seen[doc] = true;
        values[doc] = real(y);
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(parse_err(
            path,
            0,
            format!("no response for doc {missing}"),
        ));
    }
    Ok(values)
}

/// Writes a corpus in triplet-TSV form, entries sorted by `(doc, word)`.
pub fn write_corpus_tsv<T: Scalar>(corpus: &SparseCorpus<T>, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut out = std::io::BufWriter::new(
        std::fs::File::create(path).map_err(|e| io_err(path, e))?,
    );
    (|| -> std::io::Result<()> {
        writeln!(
            out,
            "#docs\t{}\t#vocab\t{}",
            corpus.n_docs(),
            corpus.vocab_size()
        )?;
        for (doc, word, count) in corpus.entries() {
            writeln!(out, "{doc}\t{word}\t{count}")?;
        }
        out.flush()
    })()
    .map_err(|e| io_err(path, e))
}

/// Writes the `doc\ty` response sidecar.
pub fn write_responses_tsv<T: Scalar>(
    responses: &[T],
    path: impl AsRef<Path>,
) -> Result<()> {
    let path = path.as_ref();
    let mut out = std::io::BufWriter::new(
        std::fs::File::create(path).map_err(|e| io_err(path, e))?,
    );
    (|| -> std::io::Result<()> {
        for (doc, y) in responses.iter().enumerate() {
            writeln!(out, "{doc}\t{}", y.to_f64())?;
        }
        out.flush()
    })()
    .map_err(|e| io_err(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corpus_from(
        n: usize,
        p: usize,
        triplets: &[(usize, usize, u64)],
        y: &[f64],
    ) -> SparseCorpus<f64> {
        SparseCorpus::from_triplets(n, p, triplets, Some(y.to_vec())).unwrap()
    }

    #[test]
    fn triplet_construction_totals() {
        let c = corpus_from(2, 2, &[(0, 0, 1), (0, 1, 2), (1, 0, 3)], &[0.0, 1.0]);
        assert_eq!(c.doc_totals(), &[3, 3]);
        assert_eq!(c.total_count(), 6);
    }

    #[test]
    fn zero_count_rejected() {
        let err = SparseCorpus::<f64>::from_triplets(6, 3, &[(5, 2, 0)], None).unwrap_err();
        assert!(matches!(err, MnirError::InvalidCorpus(_)), "{err}");
    }

    #[test]
    fn out_of_bounds_doc_rejected() {
        let err = SparseCorpus::<f64>::from_triplets(3, 4, &[(7, 0, 1)], None).unwrap_err();
        assert!(err.to_string().contains("doc index 7"));
    }

    #[test]
    fn duplicate_entry_rejected() {
        let err =
            SparseCorpus::<f64>::from_triplets(2, 2, &[(0, 0, 1), (0, 0, 2), (1, 1, 1)], None)
                .unwrap_err();
        assert!(err.to_string().contains("duplicate"));
    }

    #[test]
    fn zero_total_document_rejected() {
        let err = SparseCorpus::<f64>::from_triplets(2, 2, &[(0, 0, 1)], None).unwrap_err();
        assert!(err.to_string().contains("zero total"));
    }

    #[test]
    fn collapse_groups_columns() {
        let c = corpus_from(
            3,
            2,
            &[(0, 0, 1), (0, 1, 2), (1, 0, 3), (1, 1, 4), (2, 1, 5)],
            &[0.0, 1.0, 0.0],
        );
        let col = collapse(&c).unwrap();
        assert_eq!(col.c0(), &[1, 7]);
        assert_eq!(col.c1(), &[3, 4]);
        assert_eq!(col.c0_total(), 8);
        assert_eq!(col.c1_total(), 7);
        assert!((col.pi_hat() - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn collapse_rejects_single_group() {
        let c = corpus_from(2, 1, &[(0, 0, 1), (1, 0, 1)], &[1.0, 1.0]);
        let err = collapse(&c).unwrap_err();
        assert!(matches!(err, MnirError::DegenerateGrouping(_)));
    }

    #[test]
    fn collapse_allows_empty_column() {
        let c = corpus_from(2, 3, &[(0, 0, 1), (1, 1, 1)], &[0.0, 1.0]);
        let col = collapse(&c).unwrap();
        assert_eq!(col.c0()[2] + col.c1()[2], 0);
    }

    #[test]
    fn single_doc_frequencies_center_to_zero() {
        let c = SparseCorpus::<f64>::from_triplets(1, 3, &[(0, 0, 2), (0, 2, 4)], None).unwrap();
        let f = mean_shift_frequencies(&c).unwrap();
        let mut row = vec![0.0; 3];
        f.row_dense(0, &mut row);
        for v in row {
            assert!(v.abs() < 1e-15);
        }
    }

    #[test]
    fn two_doc_frequency_example() {
        let c = SparseCorpus::<f64>::from_triplets(
            2,
            2,
            &[(0, 0, 1), (0, 1, 1), (1, 0, 3), (1, 1, 1)],
            None,
        )
        .unwrap();
        let f = mean_shift_frequencies(&c).unwrap();
        let mut row = vec![0.0; 2];
        f.row_dense(0, &mut row);
        assert!((row[0] + 0.125).abs() < 1e-15);
        assert!((row[1] - 0.125).abs() < 1e-15);
        f.row_dense(1, &mut row);
        assert!((row[0] - 0.125).abs() < 1e-15);
        assert!((row[1] + 0.125).abs() < 1e-15);
    }

    #[test]
    fn collapse_is_linear_in_concatenation() {
        let a = corpus_from(2, 2, &[(0, 0, 2), (1, 1, 3)], &[0.0, 1.0]);
        let b = corpus_from(2, 2, &[(0, 0, 5), (0, 1, 1), (1, 0, 4)], &[1.0, 0.0]);
        let mut joined: Vec<(usize, usize, u64)> = a.entries().collect();
        joined.extend(b.entries().map(|(d, w, c)| (d + 2, w, c)));
        let ab = corpus_from(4, 2, &joined, &[0.0, 1.0, 1.0, 0.0]);
        let ca = collapse(&a).unwrap();
        let cb = collapse(&b).unwrap();
        let cab = collapse(&ab).unwrap();
        for j in 0..2 {
            assert_eq!(cab.c0()[j], ca.c0()[j] + cb.c0()[j]);
            assert_eq!(cab.c1()[j], ca.c1()[j] + cb.c1()[j]);
        }
    }
}
