import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import {
  CsvSchemaError,
  parseConvergenceCsv,
  parseScalingCsv,
} from "../src/schema.js";

const convergenceCsv = readFileSync(
  new URL("./fixtures/convergence.csv", import.meta.url),
  "utf8"
);
const scalingCsv = readFileSync(
  new URL("./fixtures/scaling.csv", import.meta.url),
  "utf8"
);

const CONV_HEADER = "algorithm,evaluations,meanNormalizedBenefit,repetitions";
const SCALE_HEADER =
  "algorithm,n,meanEvals,medianEvals,stddev,censoredCount,refN2,refNLogN";

describe("parseConvergenceCsv", () => {
  it("parses the harness fixture into one series per algorithm", () => {
    const series = parseConvergenceCsv(convergenceCsv);
    expect(series.map((s) => s.algorithm)).toEqual([
      "rls_swap",
      "opo_ea",
      "gsemo",
      "semo",
      "semo_swap",
    ]);
    for (const s of series) {
      expect(s.points.length).toBe(series[0].points.length);
      expect(s.points[0].evaluations).toBe(0);
      expect(s.points.every((p) => p.mean >= 0 && p.mean <= 1)).toBe(true);
      expect(s.points.every((p) => p.repetitions === 3)).toBe(true);
      const evals = s.points.map((p) => p.evaluations);
      expect([...evals].sort((a, b) => a - b)).toEqual(evals);
    }
  });

  it("rejects a wrong header naming line 1", () => {
    const bad = convergenceCsv.replace("meanNormalizedBenefit", "mean");
    expect(() => parseConvergenceCsv(bad, "x.csv")).toThrowError(/^x\.csv:1: header/);
  });

  it("rejects a short row with its line number", () => {
    const text = `${CONV_HEADER}\nrls_swap,0,0.0,1\nrls_swap,1,0.5\n`;
    expect(() => parseConvergenceCsv(text, "x.csv")).toThrowError(
      /x\.csv:3: expected 4 fields, got 3/
    );
  });

  it("rejects non-numeric and out-of-range fields", () => {
    expect(() =>
      parseConvergenceCsv(`${CONV_HEADER}\nrls_swap,zero,0.0,1\n`, "x.csv")
    ).toThrowError(/x\.csv:2: evaluations is not a number/);
    expect(() =>
      parseConvergenceCsv(`${CONV_HEADER}\nrls_swap,0,1.5,1\n`, "x.csv")
    ).toThrowError(/x\.csv:2: meanNormalizedBenefit 1.5 outside \[0, 1\]/);
    expect(() =>
      parseConvergenceCsv(`${CONV_HEADER}\nrls_swap,-1,0.0,1\n`, "x.csv")
    ).toThrowError(/evaluations must be >= 0/);
    expect(() =>
      parseConvergenceCsv(`${CONV_HEADER}\nrls_swap,0,0.0,0\n`, "x.csv")
    ).toThrowError(/repetitions must be >= 1/);
  });

  it("accepts values inside the comparison band and clamps them", () => {
    const text = `${CONV_HEADER}\nrls_swap,0,1.0000000005,1\n`;
    const series = parseConvergenceCsv(text);
    expect(series[0].points[0].mean).toBe(1);
  });

  it("rejects a non-increasing evaluation grid", () => {
    const text = `${CONV_HEADER}\nrls_swap,5,0.0,1\nrls_swap,5,0.1,1\n`;
    expect(() => parseConvergenceCsv(text, "x.csv")).toThrowError(
      /x\.csv:3: evaluations must strictly increase within rls_swap/
    );
  });

  it("rejects empty input and a header without rows", () => {
    expect(() => parseConvergenceCsv("", "x.csv")).toThrowError(/x\.csv:1: empty file/);
    expect(() => parseConvergenceCsv(`${CONV_HEADER}\n`, "x.csv")).toThrowError(
      /x\.csv:2: no data rows/
    );
  });

  it("reports the line number on the error object", () => {
    try {
      parseConvergenceCsv(`${CONV_HEADER}\nrls_swap,0,2.0,1\n`, "x.csv");
      expect.unreachable();
    } catch (err) {
      expect(err).toBeInstanceOf(CsvSchemaError);
      expect((err as CsvSchemaError).line).toBe(2);
    }
  });
});

describe("parseScalingCsv", () => {
  it("parses the harness fixture", () => {
    const series = parseScalingCsv(scalingCsv);
    expect(series.length).toBe(5);
    for (const s of series) {
      expect(s.points.map((p) => p.n)).toEqual([10, 20, 40]);
      expect(s.points.every((p) => p.censored === 0)).toBe(true);
      expect(s.points.every((p) => Number.isFinite(p.mean))).toBe(true);
    }
    // reference columns are shared across algorithms
    for (let i = 0; i < 3; i++) {
      expect(series[1].points[i].refN2).toBe(series[0].points[i].refN2);
      expect(series[1].points[i].refNLogN).toBe(series[0].points[i].refNLogN);
    }
  });

  it("accepts nan statistics for censored cells", () => {
    const text = `${SCALE_HEADER}\nrls_swap,10,nan,nan,nan,3,100.0,33.2\n`;
    const [s] = parseScalingCsv(text);
    expect(Number.isNaN(s.points[0].mean)).toBe(true);
    expect(s.points[0].censored).toBe(3);
  });

  it("rejects unsorted and duplicate sizes with the line number", () => {
    const a = `rls_swap,20,1.0,1.0,0.0,0,1.0,1.0`;
    const b = `rls_swap,10,1.0,1.0,0.0,0,1.0,1.0`;
    expect(() => parseScalingCsv(`${SCALE_HEADER}\n${a}\n${b}\n`, "x.csv")).toThrowError(
      /x\.csv:3: n must strictly increase within rls_swap: 10 after 20/
    );
    expect(() => parseScalingCsv(`${SCALE_HEADER}\n${a}\n${a}\n`, "x.csv")).toThrowError(
      /x\.csv:3: n must strictly increase/
    );
  });

  it("rejects malformed numbers in any column", () => {
    const row = `rls_swap,10,1.0,1.0,0.0,none,1.0,1.0`;
    expect(() => parseScalingCsv(`${SCALE_HEADER}\n${row}\n`, "x.csv")).toThrowError(
      /x\.csv:2: censoredCount is not a number/
    );
  });
});
