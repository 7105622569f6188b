use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_uniscript"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_file(p: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn no_arguments_prints_usage_and_fails() {
    let o = run(&[], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
    assert!(o.stdout.is_empty());
}

#[test]
fn unknown_subcommand_and_bad_option_are_usage_errors() {
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(1));
    assert_eq!(run(&["translit", "--script", "klingon"], "").status.code(), Some(1));
    assert_eq!(run(&["mwu", "--group1", "a.txt"], "").status.code(), Some(1));
}

#[test]
fn version_names_unicode_tables() {
    let o = run(&["--version"], "");
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains(env!("CARGO_PKG_VERSION")) && s.contains("Unicode tables 15.1.0"), "{s}");
}

#[test]
fn translit_streams_lines() {
    let o = run(&["translit", "--script", "deva"], "क\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "ka\n");
    let o = run(&["translit"], "नमस्ते।\nবাংলা\n\nplain");
    assert_eq!(stdout(&o), "namastē.\nbāṁlā\n\nplain");
    let o = run(&["translit", "--keep-danda"], "नमस्ते।\n");
    assert_eq!(stdout(&o), "namastē।\n");
}

#[test]
fn translit_report_lists_unmapped_and_echoes_config() {
    let dir = tempfile::tempdir().unwrap();
    let rep = dir.path().join("rep.json");
    let o = run(&["translit", "--script", "deva", "--report", rep.to_str().unwrap()], "\u{0904}क\n");
    assert_eq!(o.status.code(), Some(0), "unmapped codepoints do not fail the run");
    let v = json_file(&rep);
    assert_eq!(v["unmapped"][0]["codepoint"], "U+0904");
    assert_eq!(v["unmapped"][0]["count"], 1);
    assert_eq!(v["config"]["script"], "deva");
    assert_eq!(v["config"]["keep_danda"], false);
}

#[test]
fn detect_emits_one_object_per_line() {
    let o = run(&["detect"], "हिंदी text\nবাংলা\n");
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["dominant"], "Devanagari");
    assert_eq!(lines[1]["dominant"], "BengaliAssamese");
}

fn doc(id: usize, lang: &str, text: &str) -> String {
    serde_json::json!({ "id": format!("d{id}"), "lang": lang, "text": text }).to_string() + "\n"
}

#[test]
fn filter_drops_mismatches_and_reports() {
    let dir = tempfile::tempdir().unwrap();
    let rep = dir.path().join("report.json");
    let input = doc(1, "hi", "यह  वाक्य है") + &doc(2, "hi", "এটা বাংলা") + &doc(3, "bn", "এটা বাংলা");
    let o = run(&["filter", "--transliterate", "--report", rep.to_str().unwrap()], &input);
    assert_eq!(o.status.code(), Some(0));
    let kept: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(kept.len(), 2);
    assert_eq!(kept[0]["text"], "yaha vākya hai");
    assert_eq!(kept[1]["id"], "d3");
    let v = json_file(&rep);
    assert_eq!(v["per_language"]["hi"]["dropped_script_mismatch"], 1);
    assert_eq!(v["config"]["transliterate"], true);
}

#[test]
fn filter_config_file_is_honoured() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    fs::write(&cfg, r#"{"allowed_scripts_by_lang": {"en": ["Latin"], "hi": ["deva", "Latin"]}}"#).unwrap();
    let input = doc(1, "en", "hello") + &doc(2, "hi", "namaste") + &doc(3, "hi", "এটা");
    let o = run(&["filter", "--config", cfg.to_str().unwrap()], &input);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
    fs::write(&cfg, "{not json").unwrap();
    assert_eq!(run(&["filter", "--config", cfg.to_str().unwrap()], &input).status.code(), Some(1));
}

#[test]
fn filter_fails_when_too_many_records_are_malformed() {
    let mut input = String::new();
    for i in 0..9 {
        input += &doc(i, "hi", "हिंदी");
    }
    input += "{broken\n";
    let o = run(&["filter"], &input);
    assert_eq!(o.status.code(), Some(0), "10% malformed is within the threshold");
    input += "{\"id\": 5}\n";
    let o = run(&["filter"], &input);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).lines().count(), 9, "kept records are still written");
}

#[test]
fn bpe_train_and_tok_metrics() {
    let dir = tempfile::tempdir().unwrap();
    let vocab = dir.path().join("vocab.json");
    let corpus = "aa aa aa\n";
    let o = run(&["bpe-train", "--vocab-size", "3", "--out", vocab.to_str().unwrap()], corpus);
    assert_eq!(o.status.code(), Some(0));
    let v = json_file(&vocab);
    assert_eq!(v["continuation_marker"], "##");
    assert_eq!(v["pieces"], serde_json::json!(["##a", "a", "aa"]));
    let summary: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(summary["config"]["vocab_size"], 3);

    let o = run(&["tok-metrics", "--vocab", vocab.to_str().unwrap()], "aa aaa a\n");
    assert_eq!(o.status.code(), Some(0));
    let m: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(m["words"], 3);
    assert_eq!(m["pieces"], 4);
    assert_eq!(m["fertility"], 4.0 / 3.0);
    assert_eq!(m["unbroken_ratio"], 2.0 / 3.0);
    assert_eq!(m["unk_words"], 0);

    let o = run(&["bpe-train", "--vocab-size", "1", "--out", vocab.to_str().unwrap()], "abc\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains('3'));
}

#[test]
fn mwu_complete_separation() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("uni.txt"), dir.path().join("multi.txt"));
    fs::write(&a, (0..9).map(|i| format!("{}\n", 80 + i)).collect::<String>()).unwrap();
    fs::write(&b, "metric\tseed\n".to_string() + &(0..9).map(|i| format!("{}\t{i}\n", 70 + i)).collect::<String>())
        .unwrap();
    let o = run(&["mwu", "--group1", a.to_str().unwrap(), "--group2", b.to_str().unwrap(), "--method", "normal"], "");
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["p_normal"].as_f64().unwrap() - 0.000412).abs() < 2e-5);
    assert_eq!(v["rho"], 1.0);
    assert_eq!(v["group1"], "uni");
    assert_eq!(v["method"], "normal_approx");
    assert_eq!(v["p_exact_ratio"], "2/48620");
    assert_eq!(v["config"]["mwu"]["alpha"], 0.05);
}

#[test]
fn mwu_batch_table() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("runs.tsv");
    let mut tsv = String::from("task\tlanguage\tseed\tmodel\tmetric\n");
    for seed in 0..5 {
        tsv += &format!("ner\thi\t{seed}\tuni-script\t{}\n", 90 + seed);
        tsv += &format!("ner\thi\t{seed}\tmulti-script\t{}\n", 80 + seed);
        tsv += &format!("ner\tbn\t{seed}\tuni-script\t{}\n", 80 + 2 * seed);
        tsv += &format!("ner\tbn\t{seed}\tmulti-script\t{}\n", 81 + 2 * seed);
    }
    fs::write(&t, tsv).unwrap();
    let o = run(&["mwu", "--batch", t.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("task\tlanguage"));
    assert!(lines[1].starts_with("ner\tbn\t5\t5"));
    assert!(lines[2].starts_with("ner\thi\t5\t5"));
    let o = run(&["mwu", "--batch", t.to_str().unwrap(), "--json"], "");
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["results"][1]["result"]["rho"], 1.0);

    fs::write(&t, "task\tlanguage\tseed\tmodel\tmetric\nner\thi\t0\tuni-script\tabc\n").unwrap();
    assert_eq!(run(&["mwu", "--batch", t.to_str().unwrap()], "").status.code(), Some(2));
}

#[test]
fn cka_table_and_tsv() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("manifest.json");
    fs::write(
        &manifest,
        r#"{"languages": ["hi", "bn", "pa"], "layers": [0, 1], "n_sentences": 4, "sentence_ids": ["s1", "s2", "s3", "s4"]}"#,
    )
    .unwrap();
    let rows = ["1,0,2", "0,1,1", "3,1,0", "2,2,2"];
    for (lang, scale) in [("hi", 1.0), ("bn", 2.0), ("pa", -1.0)] {
        fs::create_dir(dir.path().join(lang)).unwrap();
        for layer in [0, 1] {
            if lang == "pa" && layer == 1 {
                continue;
            }
            let body: String = rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let vals: Vec<String> =
                        r.split(',').map(|x| (x.parse::<f64>().unwrap() * scale + (i * layer) as f64).to_string()).collect();
                    vals.join(",") + "\n"
                })
                .collect();
            fs::write(dir.path().join(lang).join(format!("layer_{layer}.csv")), body).unwrap();
        }
    }
    let (out, tsv) = (dir.path().join("table.json"), dir.path().join("avg.tsv"));
    let args = ["cka", "--manifest", manifest.to_str().unwrap(), "--out", out.to_str().unwrap(), "--tsv", tsv.to_str().unwrap()];
    let o = run(&args, "");
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json_file(&out);
    let first = fs::read(&out).unwrap();
    let score = v["scores"].as_array().unwrap().iter().find(|s| s["language_a"] == "bn" && s["language_b"] == "hi" && s["layer"] == 0).unwrap();
    assert!((score["score"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert_eq!(v["gaps"].as_array().unwrap().len(), 2);
    assert_eq!(v["config"]["pooling"], "mean");
    assert!(fs::read_to_string(&tsv).unwrap().starts_with("language\tlayer\tmean_cka\tpartners\n"));
    run(&args, "");
    assert_eq!(fs::read(&out).unwrap(), first, "reruns are byte-identical");
}

#[test]
fn reruns_are_byte_identical() {
    let text = "नमस्ते दुनिया\nএটা বাংলা\n".repeat(50);
    let a = run(&["translit"], &text);
    let b = run(&["translit"], &text);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn input_and_output_files() {
    let dir = tempfile::tempdir().unwrap();
    let (i, o) = (dir.path().join("in.txt"), dir.path().join("out.txt"));
    fs::write(&i, "ਪੰਜਾਬੀ\n").unwrap();
    let r = run(&["translit", "--input", i.to_str().unwrap(), "--output", o.to_str().unwrap()], "");
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&o).unwrap(), "paṁjābī\n");
    let missing = dir.path().join("nope.txt");
    assert_eq!(run(&["translit", "--input", missing.to_str().unwrap()], "").status.code(), Some(1));
}
