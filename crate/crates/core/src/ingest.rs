//! Peering record files and graph construction.
//!
//! Four CSV inputs, each UTF-8 with a mandatory header row and `#` comment lines:
//!
//! | file           | header              |
//! |----------------|---------------------|
//! | `ixp.csv`      | `asn,ixp_id`        |
//! | `facility.csv` | `asn,facility_id`   |
//! | `links.csv`    | `asn_a,asn_b`       |
//! | `providers.csv`| `asn`               |
//!
//! Two ASs are connected when they share an IXP (public peering), share a facility (private
//! peering) or appear together in `links.csv` (direct link).

use std::collections::{BTreeMap, BTreeSet};
use std::fs::File;
use std::io::Read;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::{AsnId, EdgeLabel, PeeringGraph};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PeeringRecordSet {
    pub ixp_memberships: BTreeSet<(AsnId, String)>,
    pub facility_memberships: BTreeSet<(AsnId, String)>,
    /// Stored with the smaller ASN first.
    pub direct_links: BTreeSet<(AsnId, AsnId)>,
    pub providers: BTreeSet<AsnId>,
}

#[derive(Clone, Debug)]
pub struct RecordFiles {
    pub ixp: PathBuf,
    pub facility: PathBuf,
    pub links: PathBuf,
    pub providers: PathBuf,
}

impl RecordFiles {
    /// The four standard file names inside `dir`.
    pub fn in_dir(dir: impl AsRef<Path>) -> Self {
        let dir = dir.as_ref();
        RecordFiles {
            ixp: dir.join("ixp.csv"),
            facility: dir.join("facility.csv"),
            links: dir.join("links.csv"),
            providers: dir.join("providers.csv"),
        }
    }
}

pub fn parse_records(files: &RecordFiles) -> Result<PeeringRecordSet> {
    let mut records = PeeringRecordSet::default();
    records.add_ixp_csv(open(&files.ixp)?, &files.ixp)?;
    records.add_facility_csv(open(&files.facility)?, &files.facility)?;
    records.add_links_csv(open(&files.links)?, &files.links)?;
    records.add_providers_csv(open(&files.providers)?, &files.providers)?;
    Ok(records)
}

fn open(path: &Path) -> Result<File> {
    File::open(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

struct Row {
    line: u64,
    fields: csv::StringRecord,
}

fn read_rows<R: Read>(reader: R, source: &Path, header: &[&str]) -> Result<Vec<Row>> {
    let parse_err = |line: u64, field: &str, message: String| Error::Parse {
        file: source.to_owned(),
        line,
        field: field.to_owned(),
        message,
    };
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(reader);

    let mut rows = Vec::new();
    let mut seen_header = false;
    for result in rdr.records() {
        let record = result.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            parse_err(line, "-", e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if !seen_header {
            let got: Vec<&str> = record.iter().collect();
            if got != header {
                return Err(parse_err(
                    line,
                    "header",
                    format!("expected `{}`, found `{}`", header.join(","), got.join(",")),
                ));
            }
            seen_header = true;
            continue;
        }
        if record.len() != header.len() {
            let field = header.get(record.len()).unwrap_or(&"-");
            return Err(parse_err(
                line,
                field,
                format!("expected {} fields, found {}", header.len(), record.len()),
            ));
        }
        rows.push(Row {
            line,
            fields: record,
        });
    }
    Ok(rows)
}

fn parse_asn(row: &Row, col: usize, name: &str, source: &Path) -> Result<AsnId> {
    let raw = &row.fields[col];
    let err = |message: String| Error::Parse {
        file: source.to_owned(),
        line: row.line,
        field: name.to_owned(),
        message,
    };
    let value: i64 = raw
        .parse()
        .map_err(|_| err(format!("`{raw}` is not a base-10 integer")))?;
    AsnId::try_from(value).map_err(|_| err(format!("ASN {value} is not a positive 32-bit number")))
}

fn parse_id(row: &Row, col: usize, name: &str, source: &Path) -> Result<String> {
    let raw = &row.fields[col];
    if raw.is_empty() {
        return Err(Error::Parse {
            file: source.to_owned(),
            line: row.line,
            field: name.to_owned(),
            message: "empty identifier".to_owned(),
        });
    }
    Ok(raw.to_owned())
}

impl PeeringRecordSet {
    pub fn add_ixp_csv<R: Read>(&mut self, reader: R, source: &Path) -> Result<()> {
        for row in read_rows(reader, source, &["asn", "ixp_id"])? {
            let asn = parse_asn(&row, 0, "asn", source)?;
            let ixp = parse_id(&row, 1, "ixp_id", source)?;
            self.ixp_memberships.insert((asn, ixp));
        }
        Ok(())
    }

    pub fn add_facility_csv<R: Read>(&mut self, reader: R, source: &Path) -> Result<()> {
        for row in read_rows(reader, source, &["asn", "facility_id"])? {
            let asn = parse_asn(&row, 0, "asn", source)?;
            let facility = parse_id(&row, 1, "facility_id", source)?;
            self.facility_memberships.insert((asn, facility));
        }
        Ok(())
    }

    pub fn add_links_csv<R: Read>(&mut self, reader: R, source: &Path) -> Result<()> {
        for row in read_rows(reader, source, &["asn_a", "asn_b"])? {
            let a = parse_asn(&row, 0, "asn_a", source)?;
            let b = parse_asn(&row, 1, "asn_b", source)?;
            if a == b {
                return Err(Error::SelfLink {
                    file: source.to_owned(),
                    line: row.line,
                });
            }
            self.direct_links.insert((a.min(b), a.max(b)));
        }
        Ok(())
    }

    pub fn add_providers_csv<R: Read>(&mut self, reader: R, source: &Path) -> Result<()> {
        for row in read_rows(reader, source, &["asn"])? {
            self.providers.insert(parse_asn(&row, 0, "asn", source)?);
        }
        Ok(())
    }

    pub fn is_empty(&self) -> bool {
        self.ixp_memberships.is_empty()
            && self.facility_memberships.is_empty()
            && self.direct_links.is_empty()
            && self.providers.is_empty()
    }

    /// Every ASN named by a membership or a direct link.
    pub fn peering_asns(&self) -> BTreeSet<AsnId> {
        self.ixp_memberships
            .iter()
            .chain(&self.facility_memberships)
            .map(|(a, _)| *a)
            .chain(self.direct_links.iter().flat_map(|&(a, b)| [a, b]))
            .collect()
    }

    /// Labeled AS pairs produced by each connection rule before pairs are merged: one pair per
    /// co-member couple of every IXP and facility, plus every direct link.
    pub fn candidate_links(&self) -> Vec<(AsnId, AsnId, EdgeLabel)> {
        let mut out = Vec::new();
        clique_pairs(&self.ixp_memberships, EdgeLabel::PublicPeering, &mut out);
        clique_pairs(&self.facility_memberships, EdgeLabel::PrivatePeering, &mut out);
        out.extend(
            self.direct_links
                .iter()
                .map(|&(a, b)| (a, b, EdgeLabel::DirectLink)),
        );
        out
    }
}

fn clique_pairs(
    memberships: &BTreeSet<(AsnId, String)>,
    label: EdgeLabel,
    out: &mut Vec<(AsnId, AsnId, EdgeLabel)>,
) {
    let mut groups: BTreeMap<&str, Vec<AsnId>> = BTreeMap::new();
    for (asn, group) in memberships {
        groups.entry(group.as_str()).or_default().push(*asn);
    }
    for members in groups.values() {
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                out.push((a, b, label));
            }
        }
    }
}

/// Builds the peering graph. Providers must appear in at least one membership or link.
pub fn build_graph(records: &PeeringRecordSet) -> Result<PeeringGraph> {
    let nodes = records.peering_asns();
    if let Some(p) = records.providers.iter().find(|p| !nodes.contains(p)) {
        return Err(Error::UnknownProvider(*p));
    }
    PeeringGraph::new(
        nodes,
        records.candidate_links(),
        records.providers.iter().copied(),
    )
}

/// Parses the four files and builds the graph.
pub fn load_graph(files: &RecordFiles) -> Result<PeeringGraph> {
    build_graph(&parse_records(files)?)
}
