//! Fetch path against a local HTTP server standing in for the OEIS host.

use std::io::{BufRead, BufReader, Write};
use std::net::TcpListener;
use std::thread;
use std::time::Duration;

use dyckseq_core::oeis::{
    a002054, cache_path, compare, fetch_bfile, index_shift, local_values, FetchConfig, SequenceId,
};
use dyckseq_core::DyckError;

/// Serves `requests` connections, answering `/A002054/b002054.txt` with a
/// short b-file and everything else with 404. Returns the base URL.
fn serve(requests: usize) -> String {
    let listener = TcpListener::bind("127.0.0.1:0").unwrap();
    let base = format!("http://{}", listener.local_addr().unwrap());
    thread::spawn(move || {
        for stream in listener.incoming().take(requests) {
            let mut stream = stream.unwrap();
            let mut reader = BufReader::new(stream.try_clone().unwrap());
            let mut request_line = String::new();
            reader.read_line(&mut request_line).unwrap();
            loop {
                let mut header = String::new();
                if reader.read_line(&mut header).unwrap() == 0 || header == "\r\n" {
                    break;
                }
            }
            let path = request_line.split_whitespace().nth(1).unwrap_or("");
            let (status, body) = if path == "/A002054/b002054.txt" {
                let body: String = (1..=25u64)
                    .map(|k| format!("{k} {}\n", a002054(k).unwrap()))
                    .collect();
                ("200 OK", body)
            } else {
                ("404 Not Found", String::from("not found\n"))
            };
            write!(
                stream,
                "HTTP/1.1 {status}\r\nContent-Type: text/plain\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}",
                body.len()
            )
            .unwrap();
        }
    });
    base
}

fn config(base_url: String, cache_dir: &std::path::Path) -> FetchConfig {
    FetchConfig {
        base_url,
        cache_dir: cache_dir.to_path_buf(),
        offline: false,
        timeout: Duration::from_secs(5),
    }
}

#[test]
fn fetch_caches_and_compares() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(serve(1), dir.path());
    let id = SequenceId::A002054;

    let bfile = fetch_bfile(id, &cfg).unwrap();
    assert_eq!(bfile.records[0].0, 1);
    assert_eq!(bfile.get(1).unwrap().to_string(), "1");
    assert!(cache_path(dir.path(), id).exists());

    let values = local_values(id, 40).unwrap();
    let outcome = compare("A002054", &values, &bfile, index_shift(id).unwrap()).unwrap();
    assert!(outcome.passed, "{outcome}");
    assert_eq!(
        outcome.note.as_deref(),
        Some("25 terms matched, b-file indices 1..=25")
    );

    // The server is gone; offline mode still answers from the cache.
    let offline = FetchConfig {
        offline: true,
        ..cfg
    };
    assert_eq!(fetch_bfile(id, &offline).unwrap(), bfile);
}

#[test]
fn missing_sequence_is_a_network_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(serve(1), dir.path());
    let missing = "A000000".parse::<SequenceId>().unwrap();
    assert!(matches!(
        fetch_bfile(missing, &cfg),
        Err(DyckError::Network(_))
    ));
    assert!(!cache_path(dir.path(), missing).exists());
}

#[test]
fn corrupted_cache_reports_the_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let id = SequenceId::A002054;
    std::fs::write(cache_path(dir.path(), id), "1 1\n2 5\n3 22\n4 84\n").unwrap();
    let cfg = FetchConfig {
        offline: true,
        ..config(String::new(), dir.path())
    };
    let bfile = fetch_bfile(id, &cfg).unwrap();
    let outcome = compare("A002054", &local_values(id, 10).unwrap(), &bfile, 0).unwrap();
    assert!(!outcome.passed);
    let detail = outcome.detail.unwrap();
    assert_eq!(detail.term, 3);
    assert_eq!(
        (detail.expected.as_str(), detail.actual.as_str()),
        ("22", "21")
    );
}
