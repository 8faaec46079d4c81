//! Plain-text formats for quandles, meshes and towers.
//!
//! Every format is line oriented with 1-based element labels. Blank lines
//! and lines whose first non-space character is `#` are ignored.
//!
//! ```text
//! quandle 3
//! 1 3 2
//! 3 2 1
//! 2 1 3
//! ```
//!
//! A quandle may also be given as `group <n>` followed by a 1-based
//! multiplication table (read as its conjugation quandle) or as
//! `ab <f1> <f2> ...` (read as the Takasaki kei of `ℤ_f1 ⊕ ℤ_f2 ⊕ ...`).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::constructors::{conj, takasaki, AbelianGroupSpec, GroupTable};
use crate::limits::{TowerKind, TowerSpec};
use crate::mesh::{MeshBlock, MeshSpec};
use crate::perm::Permutation;
use crate::quandle::{validate_table, ElementMap, FiniteQuandle};
use crate::{Error, Result};

struct Lines<'a> {
    path: PathBuf,
    lines: Vec<(usize, &'a str)>,
    pos: usize,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str, path: &Path) -> Self {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let last_line = text.lines().count();
        Lines {
            path: path.to_path_buf(),
            lines,
            pos: 0,
            last_line,
        }
    }

    fn err(&self, line: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            path: self.path.clone(),
            line,
            msg: msg.into(),
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let item = self.lines.get(self.pos).copied().ok_or_else(|| {
            self.err(
                self.last_line.max(1),
                format!("unexpected end of input, expected {what}"),
            )
        })?;
        self.pos += 1;
        Ok(item)
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.pos).copied()
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            Some((line, text)) => {
                Err(self.err(line, format!("unexpected trailing content `{text}`")))
            }
            None => Ok(()),
        }
    }

    fn int(&self, line: usize, tok: &str) -> Result<u64> {
        tok.parse::<u64>()
            .map_err(|_| self.err(line, format!("`{tok}` is not a nonnegative integer")))
    }

    /// A 1-based label in `1..=n`, returned 0-based.
    fn label(&self, line: usize, tok: &str, n: usize) -> Result<usize> {
        let v = self.int(line, tok)? as usize;
        if v == 0 || v > n {
            return Err(self.err(line, format!("entry {v} is outside 1..={n}")));
        }
        Ok(v - 1)
    }

    fn labels(&self, line: usize, text: &str, n: usize) -> Result<Vec<usize>> {
        text.split_whitespace()
            .map(|t| self.label(line, t, n))
            .collect()
    }

    /// `n` rows of `n` 1-based labels.
    fn table(&mut self, n: usize, header_line: usize) -> Result<Vec<Vec<usize>>> {
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let (line, text) = self.lines.get(self.pos).copied().ok_or_else(|| {
                self.err(
                    self.last_line.max(header_line),
                    format!("expected {n} rows after line {header_line}, found {r}"),
                )
            })?;
            self.pos += 1;
            let row = self.labels(line, text, n)?;
            if row.len() != n {
                return Err(self.err(
                    line,
                    format!("row {} has {} entries, expected {n}", r + 1, row.len()),
                ));
            }
            rows.push(row);
        }
        Ok(rows)
    }

    fn size(&self, line: usize, tok: Option<&str>, header: &str) -> Result<usize> {
        let tok = tok.ok_or_else(|| self.err(line, format!("`{header}` needs a size")))?;
        let n = self.int(line, tok)? as usize;
        if n == 0 {
            return Err(self.err(line, "size must be positive"));
        }
        Ok(n)
    }

    fn quandle_block(&mut self) -> Result<FiniteQuandle> {
        let (line, header) = self.next("a `quandle`, `group` or `ab` header")?;
        let mut toks = header.split_whitespace();
        match toks.next() {
            Some("quandle") => {
                let n = self.size(line, toks.next(), "quandle")?;
                self.no_more(line, toks)?;
                validate_table(&self.table(n, line)?)
            }
            Some("group") => {
                let n = self.size(line, toks.next(), "group")?;
                self.no_more(line, toks)?;
                let g = GroupTable::new(&self.table(n, line)?)
                    .map_err(|e| self.err(line, e.to_string()))?;
                conj(&g)
            }
            Some("ab") => {
                let factors = toks
                    .map(|t| self.int(line, t))
                    .collect::<Result<Vec<u64>>>()?;
                if factors.contains(&0) {
                    return Err(self.err(line, "abelian factors must be positive"));
                }
                takasaki(&AbelianGroupSpec::new(factors)).map_err(|e| self.err(line, e.to_string()))
            }
            _ => Err(self.err(
                line,
                format!("expected a `quandle`, `group` or `ab` header, found `{header}`"),
            )),
        }
    }

    fn no_more<'b>(&self, line: usize, mut toks: impl Iterator<Item = &'b str>) -> Result<()> {
        match toks.next() {
            Some(t) => Err(self.err(line, format!("unexpected token `{t}` in header"))),
            None => Ok(()),
        }
    }
}

/// Parses one quandle. `path` is used only in error messages.
pub fn parse_quandle(text: &str, path: &Path) -> Result<FiniteQuandle> {
    let mut lines = Lines::new(text, path);
    let q = lines.quandle_block()?;
    lines.finish()?;
    Ok(q)
}

pub fn read_quandle_file(path: &Path) -> Result<FiniteQuandle> {
    parse_quandle(&std::fs::read_to_string(path)?, path)
}

/// `quandle <n>` followed by the 1-based table.
pub fn serialize_quandle(q: &FiniteQuandle) -> String {
    let mut out = format!("quandle {}\n", q.size());
    write_rows(&mut out, q);
    out
}

fn write_rows(out: &mut String, q: &FiniteQuandle) {
    for row in q.rows() {
        let cells: Vec<String> = row.iter().map(|v| (v + 1).to_string()).collect();
        writeln!(out, "{}", cells.join(" ")).unwrap();
    }
}

/// Parses `mesh <k>`, then `k` lines of 1-based ambient members, then one
/// line `g <i> <j> <y> : <images>` for every block pair and every ambient
/// `y` in block `i`. The images list, for the members of block `j` in
/// ascending order, the ambient element each is sent to. Block quandles are
/// read off the diagonal lines.
pub fn parse_mesh(text: &str, path: &Path) -> Result<MeshSpec> {
    let mut lines = Lines::new(text, path);
    let (hline, header) = lines.next("a `mesh` header")?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("mesh") {
        return Err(lines.err(hline, format!("expected `mesh <k>`, found `{header}`")));
    }
    let k = lines.size(hline, toks.next(), "mesh")?;
    lines.no_more(hline, toks)?;

    let mut member_lists = Vec::with_capacity(k);
    for _ in 0..k {
        let (line, text) = lines.next("a block line")?;
        let mut members = text
            .split_whitespace()
            .map(|t| lines.int(line, t).map(|v| v as usize))
            .collect::<Result<Vec<_>>>()?;
        if members.is_empty() || members.contains(&0) {
            return Err(lines.err(line, "block lines list positive element labels"));
        }
        members.iter_mut().for_each(|m| *m -= 1);
        members.sort_unstable();
        member_lists.push(members);
    }
    let carrier: usize = member_lists.iter().map(Vec::len).sum();
    let mut location = vec![None; carrier];
    for (b, ms) in member_lists.iter().enumerate() {
        for (l, &m) in ms.iter().enumerate() {
            if m >= carrier || location[m].is_some() {
                return Err(lines.err(
                    hline,
                    format!(
                        "blocks must partition 1..={carrier}; element {} is misplaced",
                        m + 1
                    ),
                ));
            }
            location[m] = Some((b, l));
        }
    }

    let mut images: Vec<Vec<Vec<Option<Permutation>>>> = (0..k)
        .map(|i| (0..k).map(|_| vec![None; member_lists[i].len()]).collect())
        .collect();
    while let Some((line, text)) = lines.peek() {
        lines.pos += 1;
        let (lhs, rhs) = text
            .split_once(':')
            .ok_or_else(|| lines.err(line, "expected `g <i> <j> <y> : <images>`"))?;
        let toks: Vec<&str> = lhs.split_whitespace().collect();
        if toks.len() != 4 || toks[0] != "g" {
            return Err(lines.err(line, "expected `g <i> <j> <y> : <images>`"));
        }
        let i = lines.label(line, toks[1], k)?;
        let j = lines.label(line, toks[2], k)?;
        let y = lines.label(line, toks[3], carrier)?;
        let (by, ly) = location[y].unwrap();
        if by != i {
            return Err(lines.err(line, format!("element {} is not in block {}", y + 1, i + 1)));
        }
        let targets = lines.labels(line, rhs, carrier)?;
        let block_j = &member_lists[j];
        if targets.len() != block_j.len() {
            return Err(lines.err(
                line,
                format!("expected {} images for block {}", block_j.len(), j + 1),
            ));
        }
        let local = targets
            .iter()
            .map(|&t| match location[t] {
                Some((b, l)) if b == j => Ok(l),
                _ => Err(lines.err(line, format!("image {} is not in block {}", t + 1, j + 1))),
            })
            .collect::<Result<Vec<_>>>()?;
        let p = Permutation::new(local)
            .map_err(|_| lines.err(line, "images are not a permutation of the block"))?;
        if images[i][j][ly].replace(p).is_some() {
            return Err(lines.err(
                line,
                format!("duplicate line for g {} {} {}", i + 1, j + 1, y + 1),
            ));
        }
    }

    let end = lines.last_line.max(1);
    let mut gen_images = Vec::with_capacity(k);
    for (i, row) in images.into_iter().enumerate() {
        let mut out_row = Vec::with_capacity(k);
        for (j, cell) in row.into_iter().enumerate() {
            let mut perms = Vec::with_capacity(cell.len());
            for (ly, p) in cell.into_iter().enumerate() {
                perms.push(p.ok_or_else(|| {
                    lines.err(
                        end,
                        format!(
                            "missing line g {} {} {}",
                            i + 1,
                            j + 1,
                            member_lists[i][ly] + 1
                        ),
                    )
                })?);
            }
            out_row.push(perms);
        }
        gen_images.push(out_row);
    }

    let mut blocks = Vec::with_capacity(k);
    for (i, members) in member_lists.into_iter().enumerate() {
        let n = members.len();
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| gen_images[i][i][y].apply(x)).collect())
            .collect();
        let quandle = validate_table(&rows).map_err(|e| {
            lines.err(
                hline,
                format!("diagonal of block {} is not a rack: {e}", i + 1),
            )
        })?;
        blocks.push(MeshBlock { members, quandle });
    }
    MeshSpec::new(carrier, blocks, gen_images)
}

pub fn read_mesh_file(path: &Path) -> Result<MeshSpec> {
    parse_mesh(&std::fs::read_to_string(path)?, path)
}

pub fn serialize_mesh(m: &MeshSpec) -> String {
    let blocks = m.blocks();
    let mut out = format!("mesh {}\n", blocks.len());
    for b in blocks {
        let ms: Vec<String> = b.members.iter().map(|x| (x + 1).to_string()).collect();
        writeln!(out, "{}", ms.join(" ")).unwrap();
    }
    for (i, bi) in blocks.iter().enumerate() {
        for (j, bj) in blocks.iter().enumerate() {
            for (ly, y) in bi.members.iter().enumerate() {
                let p = m.image(i, j, ly);
                let imgs: Vec<String> = (0..bj.members.len())
                    .map(|l| (bj.members[p.apply(l)] + 1).to_string())
                    .collect();
                writeln!(out, "g {} {} {} : {}", i + 1, j + 1, y + 1, imgs.join(" ")).unwrap();
            }
        }
    }
    out
}

/// Parses `tower <direct|inverse> <k>`, `k` quandle blocks, then the lines
/// `map <i>: <images>` for `i = 1..k-1`. Map `i` joins levels `i` and
/// `i+1` in the direction given by the kind.
pub fn parse_tower(text: &str, path: &Path) -> Result<TowerSpec> {
    let mut lines = Lines::new(text, path);
    let (hline, header) = lines.next("a `tower` header")?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 3 || toks[0] != "tower" {
        return Err(lines.err(
            hline,
            format!("expected `tower <direct|inverse> <k>`, found `{header}`"),
        ));
    }
    let kind = match toks[1] {
        "direct" => TowerKind::Direct,
        "inverse" => TowerKind::Inverse,
        other => return Err(lines.err(hline, format!("unknown tower kind `{other}`"))),
    };
    let k = lines.size(hline, Some(toks[2]), "tower")?;
    let levels = (0..k)
        .map(|_| lines.quandle_block())
        .collect::<Result<Vec<_>>>()?;
    let mut maps = Vec::with_capacity(k - 1);
    for i in 0..k - 1 {
        let (line, text) = lines.next(&format!("`map {}:`", i + 1))?;
        let (lhs, rhs) = text
            .split_once(':')
            .ok_or_else(|| lines.err(line, "expected `map <i>: <images>`"))?;
        if lhs.split_whitespace().collect::<Vec<_>>() != ["map", &(i + 1).to_string()] {
            return Err(lines.err(line, format!("expected `map {}:`", i + 1)));
        }
        let (dom, cod) = match kind {
            TowerKind::Direct => (i, i + 1),
            TowerKind::Inverse => (i + 1, i),
        };
        let images = lines.labels(line, rhs, levels[cod].size())?;
        if images.len() != levels[dom].size() {
            return Err(lines.err(line, format!("expected {} images", levels[dom].size())));
        }
        maps.push(ElementMap::new(images, levels[cod].size())?);
    }
    lines.finish()?;
    TowerSpec::new(kind, levels, maps)
}

pub fn read_tower_file(path: &Path) -> Result<TowerSpec> {
    parse_tower(&std::fs::read_to_string(path)?, path)
}

pub fn serialize_tower(t: &TowerSpec) -> String {
    let mut out = format!("tower {} {}\n", t.kind(), t.len());
    for q in t.levels() {
        out.push_str(&serialize_quandle(q));
    }
    for (i, m) in t.maps().iter().enumerate() {
        let imgs: Vec<String> = m.images().iter().map(|v| (v + 1).to_string()).collect();
        writeln!(out, "map {}: {}", i + 1, imgs.join(" ")).unwrap();
    }
    out
}

/// Drops comments and blank lines and collapses runs of whitespace.
pub fn normalize(text: &str) -> String {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
        .fold(String::new(), |mut acc, l| {
            acc.push_str(&l);
            acc.push('\n');
            acc
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::extract_mesh;

    fn p() -> &'static Path {
        Path::new("test.qnd")
    }

    const TAIT: &str = "# three-element dihedral\nquandle 3\n1 3 2\n3 2 1\n\n2 1 3\n";

    #[test]
    fn parse_tait() {
        let q = parse_quandle(TAIT, p()).unwrap();
        assert_eq!(q.rows(), vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]);
        assert_eq!(serialize_quandle(&q), normalize(TAIT));
    }

    #[test]
    fn singleton() {
        assert_eq!(parse_quandle("quandle 1\n1\n", p()).unwrap().size(), 1);
    }

    #[test]
    fn positioned_errors() {
        let line = |text: &str| match parse_quandle(text, p()) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line("quandle 3\n1 3 2\n3 2 1\n"), 3);
        assert_eq!(line("quandel 3\n"), 1);
        assert_eq!(line("quandle 2\n1 x\n2 2\n"), 2);
        assert_eq!(line("quandle 2\n1 1\n2 2\n1 1\n"), 4);
        assert_eq!(line("quandle 2\n1 3\n2 2\n"), 2);
    }

    #[test]
    fn bad_column_is_axiom_error() {
        let e = parse_quandle("quandle 3\n1 1 1\n2 2 2\n2 3 3\n", p()).unwrap_err();
        assert!(matches!(e, Error::Axioms(_)));
    }

    #[test]
    fn alternative_headers() {
        let q = parse_quandle("ab 4\n", p()).unwrap();
        assert_eq!(q.size(), 4);
        let g = parse_quandle("group 2\n1 2\n2 1\n", p()).unwrap();
        assert_eq!(g.rows(), vec![vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn mesh_round_trip() {
        let q = parse_quandle("ab 4\n", p()).unwrap();
        let m = extract_mesh(&q, None).unwrap();
        let text = serialize_mesh(&m);
        assert_eq!(parse_mesh(&text, p()).unwrap(), m);
    }

    #[test]
    fn tower_round_trip() {
        let t = crate::limits::reduction_tower(&[2, 4]).unwrap();
        let text = serialize_tower(&t);
        assert!(text.ends_with("map 1: 1 2 1 2\n"));
        assert_eq!(parse_tower(&text, p()).unwrap(), t);
    }
}
