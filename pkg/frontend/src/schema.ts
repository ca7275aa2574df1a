/**
 * Parsers for the two experiment CSV schemas produced by the pwt harness.
 *
 * Validation is strict: the header must match exactly, every field must
 * parse, normalized benefits must stay in [0, 1] (up to the harness's
 * comparison band), and sizes/evaluation grids must strictly increase per
 * algorithm. Errors name the offending line.
 */

export const CONVERGENCE_HEADER = [
  "algorithm",
  "evaluations",
  "meanNormalizedBenefit",
  "repetitions",
] as const;

export const SCALING_HEADER = [
  "algorithm",
  "n",
  "meanEvals",
  "medianEvals",
  "stddev",
  "censoredCount",
  "refN2",
  "refNLogN",
] as const;

/** Slack around [0, 1] matching the harness's relative comparison band. */
export const NORM_BAND = 1e-9;

export class CsvSchemaError extends Error {
  readonly file: string;
  readonly line: number;

  constructor(file: string, line: number, message: string) {
    super(`${file}:${line}: ${message}`);
    this.name = "CsvSchemaError";
    this.file = file;
    this.line = line;
  }
}

export interface ConvergencePoint {
  evaluations: number;
  mean: number;
  repetitions: number;
}

export interface ScalingPoint {
  n: number;
  mean: number;
  median: number;
  stddev: number;
  censored: number;
  refN2: number;
  refNLogN: number;
}

export interface Series<P> {
  algorithm: string;
  points: P[];
}

export type ConvergenceSeries = Series<ConvergencePoint>;
export type ScalingSeries = Series<ScalingPoint>;

interface Row {
  line: number;
  fields: string[];
}

function splitRows(file: string, text: string, header: readonly string[]): Row[] {
  const lines = text.split("\n");
  while (lines.length > 0 && lines[lines.length - 1] === "") lines.pop();
  if (lines.length === 0) {
    throw new CsvSchemaError(file, 1, "empty file");
  }
  const expected = header.join(",");
  if (lines[0] !== expected) {
    throw new CsvSchemaError(file, 1, `header must be "${expected}", got "${lines[0]}"`);
  }
  if (lines.length === 1) {
    throw new CsvSchemaError(file, 2, "no data rows");
  }
  return lines.slice(1).map((raw, i) => {
    const line = i + 2;
    const fields = raw.split(",");
    if (fields.length !== header.length) {
      throw new CsvSchemaError(
        file,
        line,
        `expected ${header.length} fields, got ${fields.length}`
      );
    }
    return { line, fields };
  });
}

const NUMBER_RE = /^-?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$/;

function parseNumber(
  file: string,
  line: number,
  name: string,
  raw: string,
  opts: { integer?: boolean; min?: number; allowNan?: boolean } = {}
): number {
  if (opts.allowNan && raw === "nan") return NaN;
  if (!NUMBER_RE.test(raw)) {
    throw new CsvSchemaError(file, line, `${name} is not a number: "${raw}"`);
  }
  const value = Number(raw);
  if (opts.integer && !Number.isInteger(value)) {
    throw new CsvSchemaError(file, line, `${name} must be an integer, got ${raw}`);
  }
  if (opts.min !== undefined && value < opts.min) {
    throw new CsvSchemaError(file, line, `${name} must be >= ${opts.min}, got ${raw}`);
  }
  return value;
}

function groupByAlgorithm<P>(
  file: string,
  rows: { line: number; algorithm: string; point: P }[],
  xName: string,
  xOf: (p: P) => number
): Series<P>[] {
  const order: string[] = [];
  const byName = new Map<string, Series<P>>();
  for (const { line, algorithm, point } of rows) {
    if (algorithm === "") {
      throw new CsvSchemaError(file, line, "algorithm name is empty");
    }
    let series = byName.get(algorithm);
    if (!series) {
      series = { algorithm, points: [] };
      byName.set(algorithm, series);
      order.push(algorithm);
    }
    const prev = series.points[series.points.length - 1];
    if (prev !== undefined && xOf(point) <= xOf(prev)) {
      throw new CsvSchemaError(
        file,
        line,
        `${xName} must strictly increase within ${algorithm}: ` +
          `${xOf(point)} after ${xOf(prev)}`
      );
    }
    series.points.push(point);
  }
  return order.map((name) => byName.get(name)!);
}

export function parseConvergenceCsv(text: string, file = "convergence.csv"): ConvergenceSeries[] {
  const rows = splitRows(file, text, CONVERGENCE_HEADER).map(({ line, fields }) => {
    const mean = parseNumber(file, line, "meanNormalizedBenefit", fields[2]);
    if (mean < -NORM_BAND || mean > 1 + NORM_BAND) {
      throw new CsvSchemaError(
        file,
        line,
        `meanNormalizedBenefit ${fields[2]} outside [0, 1]`
      );
    }
    return {
      line,
      algorithm: fields[0],
      point: {
        evaluations: parseNumber(file, line, "evaluations", fields[1], {
          integer: true,
          min: 0,
        }),
        mean: Math.min(1, Math.max(0, mean)),
        repetitions: parseNumber(file, line, "repetitions", fields[3], {
          integer: true,
          min: 1,
        }),
      },
    };
  });
  return groupByAlgorithm(file, rows, "evaluations", (p) => p.evaluations);
}

export function parseScalingCsv(text: string, file = "scaling.csv"): ScalingSeries[] {
  const rows = splitRows(file, text, SCALING_HEADER).map(({ line, fields }) => ({
    line,
    algorithm: fields[0],
    point: {
      n: parseNumber(file, line, "n", fields[1], { integer: true, min: 1 }),
      mean: parseNumber(file, line, "meanEvals", fields[2], { min: 0, allowNan: true }),
      median: parseNumber(file, line, "medianEvals", fields[3], {
        min: 0,
        allowNan: true,
      }),
      stddev: parseNumber(file, line, "stddev", fields[4], { min: 0, allowNan: true }),
      censored: parseNumber(file, line, "censoredCount", fields[5], {
        integer: true,
        min: 0,
      }),
      refN2: parseNumber(file, line, "refN2", fields[6], { min: 0, allowNan: true }),
      refNLogN: parseNumber(file, line, "refNLogN", fields[7], {
        min: 0,
        allowNan: true,
      }),
    },
  }));
  return groupByAlgorithm(file, rows, "n", (p) => p.n);
}
