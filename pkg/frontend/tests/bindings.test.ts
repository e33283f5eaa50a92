/**
 * Parity tests: everything produced through the bindings must equal the
 * output of driving the CLI directly on the same input.
 */

import { spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { beforeAll, describe, expect, it } from "vitest";

import {
  DataError,
  HEBTOK_BIN,
  UsageError,
  encode,
  encodeBatch,
  open,
  pretokenize,
  pretokenizeBatch,
  train,
  version,
} from "../src/index.js";

const LINE_COUNT = 1000;

/** Deterministic 32-bit LCG so the corpus is stable across runs. */
function makeRng(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (Math.imul(state, 1664525) + 1013904223) >>> 0;
    return state / 2 ** 32;
  };
}

const LETTERS = "אבגדהוזחטיכלמנסעפצקרשת";
const PREFIXES = ["", "ו", "ש", "ה", "וכש", "מ", "כשה", "ב", "של"];
const SUFFIXES = ["", "ה", "נו", "ים", "הם", "י"];
const PUNCT = ["", ",", ".", "?", "!"];

function randomCorpus(seed: number, lines: number): string[] {
  const rng = makeRng(seed);
  const pick = <T>(items: T[]): T => items[Math.floor(rng() * items.length)];
  const out: string[] = [];
  for (let i = 0; i < lines; i++) {
    const words: string[] = [];
    const count = 3 + Math.floor(rng() * 9);
    for (let w = 0; w < count; w++) {
      let word = "";
      const len = 2 + Math.floor(rng() * 5);
      for (let c = 0; c < len; c++) {
        word += LETTERS[Math.floor(rng() * LETTERS.length)];
      }
      word = pick(PREFIXES) + word + pick(SUFFIXES) + pick(PUNCT);
      if (rng() < 0.04) {
        word = String(Math.floor(rng() * 3000));
      }
      words.push(word);
    }
    out.push(words.join(" "));
  }
  return out;
}

function runCli(args: string[], input = ""): string {
  const result = spawnSync(HEBTOK_BIN, args, {
    input,
    encoding: "utf-8",
    maxBuffer: 256 * 1024 * 1024,
  });
  if (result.status !== 0) {
    throw new Error(`CLI failed (${result.status}): ${result.stderr}`);
  }
  return result.stdout;
}

function outputLines(stdout: string): string[] {
  return stdout === "" ? [] : stdout.replace(/\n$/, "").split("\n");
}

let workDir: string;
let corpusPath: string;
let vocabPath: string;
let corpus: string[];

beforeAll(() => {
  workDir = mkdtempSync(join(tmpdir(), "hebtok-bindings-"));
  corpus = randomCorpus(0xc0ffee, LINE_COUNT);
  corpusPath = join(workDir, "corpus.txt");
  writeFileSync(corpusPath, corpus.join("\n") + "\n", "utf-8");
  vocabPath = join(workDir, "vocab.txt");
  runCli([
    "train", "--method", "prefsuf", "--vocab-size", "1500",
    "-i", corpusPath, "-o", vocabPath,
  ]);
}, 120_000);

describe("parity with the CLI", () => {
  it("pretokenize matches on 1000 corpus lines", () => {
    const handle = open(vocabPath, "prefsuf");
    const viaCli = outputLines(
      runCli(["pretokenize", "--method", "prefsuf", "-i", corpusPath]),
    );
    const viaBindings = pretokenizeBatch(handle, corpus).map((tokens) => tokens.join(" "));
    expect(viaBindings).toEqual(viaCli);
  });

  it("encode matches on 1000 corpus lines, pieces and ids", () => {
    const handle = open(vocabPath, "prefsuf");
    const pieceLines = outputLines(
      runCli(["encode", "--vocab", vocabPath, "--method", "prefsuf", "-i", corpusPath]),
    );
    const idLines = outputLines(
      runCli(["encode", "--vocab", vocabPath, "--method", "prefsuf", "--ids", "-i", corpusPath]),
    );
    const encoded = encodeBatch(handle, corpus);
    expect(encoded.map((e) => e.pieces.join(" "))).toEqual(pieceLines);
    expect(encoded.map((e) => e.ids.join(" "))).toEqual(idLines);
  });

  it("single-sentence calls equal the CLI on single lines", () => {
    const handle = open(vocabPath, "prefsuf");
    for (const text of ["שחרור", "ושחרורה של דבר.", corpus[7]]) {
      const cliPieces = outputLines(
        runCli(["encode", "--vocab", vocabPath, "--method", "prefsuf"], text + "\n"),
      )[0];
      expect(encode(handle, text).pieces.join(" ")).toBe(cliPieces);
      const cliMarked = outputLines(
        runCli(["pretokenize", "--method", "prefsuf"], text + "\n"),
      )[0];
      expect(pretokenize(handle, text).join(" ")).toBe(cliMarked);
    }
  });

  it("morphseg with the fallback segmenter matches the CLI", () => {
    const handle = open(vocabPath, "morphseg", { decomposeOverlapping: true });
    const sample = corpus.slice(0, 50);
    const viaCli = outputLines(
      runCli(
        [
          "pretokenize", "--method", "morphseg",
          "--fallback-segmenter", "--decompose-overlapping",
        ],
        sample.join("\n") + "\n",
      ),
    );
    const viaBindings = pretokenizeBatch(handle, sample).map((tokens) => tokens.join(" "));
    expect(viaBindings).toEqual(viaCli);
  });

  it("train through the bindings reproduces the CLI vocabulary", () => {
    const trained = train(corpusPath, {
      pipeline: "prefsuf",
      vocabSize: 1500,
      outputPath: join(workDir, "vocab-bindings.txt"),
    });
    expect(readFileSync(trained, "utf-8")).toBe(readFileSync(vocabPath, "utf-8"));
  }, 60_000);
});

describe("handle behavior", () => {
  it("open with a missing file throws", () => {
    expect(() => open(join(workDir, "nope.vocab"), "prefsuf")).toThrow(DataError);
  });

  it("pretokenize of an empty sentence is empty", () => {
    const handle = open(vocabPath, "prefsuf");
    expect(pretokenize(handle, "")).toEqual([]);
    expect(encode(handle, "").pieces).toEqual([]);
  });

  it("rejects embedded newlines", () => {
    const handle = open(vocabPath, "prefsuf");
    expect(() => pretokenize(handle, "א\nב")).toThrow(UsageError);
  });

  it("handle is immutable and exposes vocabulary ids", () => {
    const handle = open(vocabPath, "prefsuf");
    expect(handle.vocabCount).toBe(1500);
    expect(handle.tokenId("[PAD]")).toBe(0);
    expect(() => {
      (handle as { pipeline: string }).pipeline = "baseline";
    }).toThrow();
  });
});

describe("versioning", () => {
  it("core version matches the package version", () => {
    const packageVersion = JSON.parse(
      readFileSync(new URL("../package.json", import.meta.url), "utf-8"),
    ).version;
    expect(version()).toBe(packageVersion);
  });
});
