/**
 * Node bindings for the hebtok tokenization core.
 *
 * The core is driven exclusively through its command-line interface and
 * file formats; no tokenization logic is reimplemented here. A
 * {@link TokenizerHandle} owns a loaded vocabulary (token id = line index
 * in the vocabulary file) plus a pipeline configuration, and is immutable
 * after construction, so it can be shared freely across callers.
 *
 * Outputs are byte-identical to running the CLI directly on the same
 * input; the test suite asserts that parity line by line.
 */

import { spawnSync } from "node:child_process";
import { existsSync, readFileSync } from "node:fs";

/** Executable used to reach the core; override via HEBTOK_BIN. */
export const HEBTOK_BIN = process.env.HEBTOK_BIN ?? "hebtok";

const MAX_BUFFER = 256 * 1024 * 1024;

export type Pipeline = "baseline" | "prefsuf" | "morphseg";

export interface OpenOptions {
  /** Minimum host length left by affix separation (core default: 2). */
  minHost?: number;
  /** Break overlapping affixes (כש, מש, נו) in segmenter output. */
  decomposeOverlapping?: boolean;
  /** Drop Hebrew diacritic code points before splitting. */
  stripDiacritics?: boolean;
  /** Continuation marker of the vocabulary (core default: "##"). */
  marker?: string;
}

export interface TrainConfig {
  pipeline: Pipeline;
  vocabSize: number;
  outputPath: string;
  minPairFrequency?: number;
  maxWordLength?: number;
  marker?: string;
  minHost?: number;
  stripDiacritics?: boolean;
}

export interface Encoded {
  pieces: string[];
  ids: number[];
}

/** Core rejected the invocation (bad flags or options); exit code 1. */
export class UsageError extends Error {}

/** Core rejected the data (malformed file, infeasible config); exit code 2. */
export class DataError extends Error {}

function run(args: string[], input: string): string {
  const result = spawnSync(HEBTOK_BIN, args, {
    input,
    encoding: "utf-8",
    maxBuffer: MAX_BUFFER,
  });
  if (result.error) {
    throw result.error;
  }
  if (result.status !== 0) {
    const message = (result.stderr || "").trim() || `exit code ${result.status}`;
    throw result.status === 1 ? new UsageError(message) : new DataError(message);
  }
  return result.stdout;
}

function splitLines(output: string): string[] {
  return output === "" ? [] : output.replace(/\n$/, "").split("\n");
}

function checkSingleLine(texts: string[]): void {
  for (const text of texts) {
    if (text.includes("\n")) {
      throw new UsageError("texts must be single sentences without newlines");
    }
  }
}

/**
 * An opaque, immutable handle over a loaded vocabulary and pipeline
 * configuration. Create one with {@link open}.
 */
export class TokenizerHandle {
  readonly vocabPath: string;
  readonly pipeline: Pipeline;
  readonly options: Readonly<OpenOptions>;
  private readonly tokenIds: Map<string, number>;

  /** @internal */
  constructor(vocabPath: string, pipeline: Pipeline, options: OpenOptions) {
    if (!existsSync(vocabPath)) {
      throw new DataError(`vocabulary file not found: ${vocabPath}`);
    }
    this.vocabPath = vocabPath;
    this.pipeline = pipeline;
    this.options = Object.freeze({ ...options });
    this.tokenIds = new Map();
    const lines = readFileSync(vocabPath, "utf-8").replace(/\n$/, "").split("\n");
    lines.forEach((token, id) => {
      if (this.tokenIds.has(token)) {
        throw new DataError(`duplicate token in vocabulary: ${token}`);
      }
      this.tokenIds.set(token, id);
    });
    Object.freeze(this);
  }

  /** Vocabulary size (number of token ids). */
  get vocabCount(): number {
    return this.tokenIds.size;
  }

  /** Token id for a piece, or undefined when absent. */
  tokenId(piece: string): number | undefined {
    return this.tokenIds.get(piece);
  }

  /** @internal flags shared by encode and pretokenize invocations */
  pipelineArgs(): string[] {
    const args = ["--method", this.pipeline];
    if (this.pipeline === "morphseg") {
      args.push("--fallback-segmenter");
      if (this.options.decomposeOverlapping) {
        args.push("--decompose-overlapping");
      }
    }
    if (this.options.minHost !== undefined) {
      args.push("--min-host", String(this.options.minHost));
    }
    if (this.options.stripDiacritics) {
      args.push("--strip-diacritics");
    }
    return args;
  }

  /** @internal */
  markerArgs(): string[] {
    return this.options.marker !== undefined ? ["--marker", this.options.marker] : [];
  }
}

/**
 * Load a vocabulary and fix a pipeline configuration.
 *
 * @throws DataError when the vocabulary file is missing or malformed.
 */
export function open(
  vocabPath: string,
  pipeline: Pipeline,
  options: OpenOptions = {},
): TokenizerHandle {
  return new TokenizerHandle(vocabPath, pipeline, options);
}

/**
 * Subword pieces and their ids for one sentence.
 */
export function encode(handle: TokenizerHandle, text: string): Encoded {
  return encodeBatch(handle, [text])[0];
}

/**
 * Subword pieces and ids for many sentences in a single core invocation.
 */
export function encodeBatch(handle: TokenizerHandle, texts: string[]): Encoded[] {
  if (texts.length === 0) {
    return [];
  }
  checkSingleLine(texts);
  const args = [
    "encode",
    "--vocab",
    handle.vocabPath,
    ...handle.pipelineArgs(),
    ...handle.markerArgs(),
  ];
  const lines = splitLines(run(args, texts.join("\n") + "\n"));
  return lines.map((line) => {
    const pieces = line === "" ? [] : line.split(" ");
    const ids = pieces.map((piece) => {
      const id = handle.tokenId(piece);
      if (id === undefined) {
        throw new DataError(`piece missing from the vocabulary: ${piece}`);
      }
      return id;
    });
    return { pieces, ids };
  });
}

/**
 * Marked pre-token strings (prefixes as `p+`, suffixes as `+s`) for one
 * sentence, before any vocabulary lookup.
 */
export function pretokenize(handle: TokenizerHandle, text: string): string[] {
  return pretokenizeBatch(handle, [text])[0];
}

/** Marked pre-token strings for many sentences in a single invocation. */
export function pretokenizeBatch(handle: TokenizerHandle, texts: string[]): string[][] {
  if (texts.length === 0) {
    return [];
  }
  checkSingleLine(texts);
  const args = ["pretokenize", ...handle.pipelineArgs()];
  const lines = splitLines(run(args, texts.join("\n") + "\n"));
  return lines.map((line) => (line === "" ? [] : line.split(" ")));
}

/**
 * Train a vocabulary over a line-delimited corpus file; returns the
 * vocabulary path (one token per line, line index = id).
 */
export function train(corpusPath: string, config: TrainConfig): string {
  const args = [
    "train",
    "--method",
    config.pipeline,
    "--vocab-size",
    String(config.vocabSize),
    "-i",
    corpusPath,
    "-o",
    config.outputPath,
  ];
  if (config.pipeline === "morphseg") {
    args.push("--fallback-segmenter");
  }
  if (config.minPairFrequency !== undefined) {
    args.push("--min-pair-freq", String(config.minPairFrequency));
  }
  if (config.maxWordLength !== undefined) {
    args.push("--max-word-length", String(config.maxWordLength));
  }
  if (config.marker !== undefined) {
    args.push("--marker", config.marker);
  }
  if (config.minHost !== undefined) {
    args.push("--min-host", String(config.minHost));
  }
  if (config.stripDiacritics) {
    args.push("--strip-diacritics");
  }
  run(args, "");
  return config.outputPath;
}

/** Version of the underlying core (matches this package's version). */
export function version(): string {
  const output = run(["--version"], "").trim();
  return output.replace(/^hebtok\s+/, "");
}
