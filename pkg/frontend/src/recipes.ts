/**
 * Figure recipes: each one reads the CSV outputs of its experiment directory
 * and produces an echarts option plus the series bookkeeping the tests check.
 *
 * fig2  cumulative degree distributions, log-log, semi-log inset for p=0
 * fig3  mean shortest-path length vs p, linear axes
 * fig4  mean clustering coefficient vs p, linear axes
 * fig5  clustering spectra C(k), one log-log panel per p, one series per m
 * fig6  log Estrada index vs network size, log-log, plus matched baselines
 */

import { readdirSync } from "fs";
import { join } from "path";
import type { EChartsOption } from "echarts";

import { CsvTable, ValidationError, loadCsv, numeric, requireColumns } from "./csv.js";

export const FIGURE_IDS = ["fig2", "fig3", "fig4", "fig5", "fig6"] as const;
export type FigureId = (typeof FIGURE_IDS)[number];

export interface FigureRecipe {
  id: FigureId;
  inputs: string[];
  option: EChartsOption;
  /** data series drawn in the main plot, one per grid value */
  seriesCount: number;
  /** fig2 only: the semi-log inset is part of the figure contract */
  hasInset?: boolean;
}

function listInputs(dir: string, prefix: string): string[] {
  let names: string[];
  try {
    names = readdirSync(dir);
  } catch {
    throw new ValidationError(`missing input directory: ${dir}`);
  }
  return names.filter((n) => n.startsWith(prefix) && n.endsWith(".csv")).sort();
}

function parseLabelNumber(name: string, re: RegExp, what: string): number {
  const match = name.match(re);
  if (!match) {
    throw new ValidationError(`cannot parse ${what} from file name '${name}'`);
  }
  return Number(match[1]);
}

const LINE_STYLE = { width: 1.5 };


function buildFig2(dir: string): FigureRecipe {
  const names = listInputs(dir, "degree_dist_");
  if (names.length === 0) {
    throw new ValidationError(`no degree_dist_*.csv files in ${dir}`);
  }
  const byP = names
    .map((n) => ({ p: parseLabelNumber(n, /_p([0-9.]+)_N/, "p"), name: n }))
    .sort((a, b) => a.p - b.p);
  const inputs: string[] = [];
  const series: object[] = [];
  let insetSeries: object | null = null;
  for (const { p, name } of byP) {
    const path = join(dir, name);
    inputs.push(path);
    const table = loadCsv(path, "degree_dist");
    requireColumns(table, ["k", "p", "cp"]);
    const points = table.rows
      .map((r) => [numeric(table, r, "k"), numeric(table, r, "cp")])
      .filter(([, cp]) => cp > 0);
    series.push({
      name: `p=${p}`,
      type: "line",
      symbol: "circle",
      symbolSize: 4,
      lineStyle: LINE_STYLE,
      data: points,
    });
    if (p === 0) {
      insetSeries = {
        name: "p=0 (semi-log)",
        type: "line",
        symbol: "diamond",
        symbolSize: 3,
        lineStyle: LINE_STYLE,
        xAxisIndex: 1,
        yAxisIndex: 1,
        data: points,
      };
    }
  }
  if (insetSeries === null) {
    throw new ValidationError(`no p=0 degree distribution in ${dir} for the semi-log inset`);
  }
  const option = {
    title: { text: "Cumulative degree distributions", left: "center" },
    legend: { bottom: 0 },
    grid: [
      { left: 70, right: 50, top: 50, bottom: 60 },
      { left: "58%", top: "14%", width: "30%", height: "30%" },
    ],
    xAxis: [
      { type: "log", name: "k", gridIndex: 0 },
      { type: "value", name: "k", gridIndex: 1, axisLabel: { fontSize: 9 } },
    ],
    yAxis: [
      { type: "log", name: "CP(k)", gridIndex: 0 },
      { type: "log", name: "CP(k)", gridIndex: 1, axisLabel: { fontSize: 9 } },
    ],
    series: [...series, insetSeries],
  } as EChartsOption;
  return { id: "fig2", inputs, option, seriesCount: series.length, hasInset: true };
}


function cliquenetRows(table: CsvTable): Record<string, string>[] {
  const rows = table.rows.filter((r) => r.model === "cliquenet");
  if (rows.length === 0) {
    throw new ValidationError(`${table.path}: no cliquenet rows`);
  }
  return rows;
}

function buildTrendFigure(id: FigureId, dir: string, column: string,
                          yName: string, title: string): FigureRecipe {
  const path = join(dir, "summary.csv");
  const table = loadCsv(path, "ensemble_summary");
  requireColumns(table, ["model", "p", column]);
  const rows = cliquenetRows(table)
    .map((r) => ({ p: numeric(table, r, "p"), y: numeric(table, r, column) }))
    .sort((a, b) => a.p - b.p);
  const option = {
    title: { text: title, left: "center" },
    grid: { left: 70, right: 40, top: 50, bottom: 50 },
    xAxis: { type: "value", name: "p", min: 0, max: 1 },
    yAxis: { type: "value", name: yName, scale: true },
    series: [
      {
        name: yName,
        type: "line",
        symbol: "circle",
        symbolSize: 7,
        lineStyle: LINE_STYLE,
        data: rows.map((r) => [r.p, r.y]),
      },
    ],
  } as EChartsOption;
  return { id, inputs: [path], option, seriesCount: 1 };
}


function buildFig5(dir: string): FigureRecipe {
  const names = listInputs(dir, "clustering_spectrum_");
  if (names.length === 0) {
    throw new ValidationError(`no clustering_spectrum_*.csv files in ${dir}`);
  }
  const entries = names.map((n) => ({
    m: parseLabelNumber(n, /_m(\d+)_p/, "m"),
    p: parseLabelNumber(n, /_p([0-9.]+)_N/, "p"),
    name: n,
  }));
  const pValues = [...new Set(entries.map((e) => e.p))].sort((a, b) => a - b);
  const inputs: string[] = [];
  const series: object[] = [];
  const panelWidth = 88 / pValues.length;
  for (const entry of entries.sort((a, b) => a.p - b.p || a.m - b.m)) {
    const path = join(dir, entry.name);
    inputs.push(path);
    const table = loadCsv(path, "clustering_spectrum");
    requireColumns(table, ["k", "c_of_k", "count"]);
    const panel = pValues.indexOf(entry.p);
    series.push({
      name: `m=${entry.m}, p=${entry.p}`,
      type: "line",
      symbol: "circle",
      symbolSize: 4,
      lineStyle: LINE_STYLE,
      xAxisIndex: panel,
      yAxisIndex: panel,
      data: table.rows
        .map((r) => [numeric(table, r, "k"), numeric(table, r, "c_of_k")])
        .filter(([, c]) => c > 0),
    });
  }
  const option = {
    title: [
      { text: "Clustering spectra", left: "center" },
      ...pValues.map((p, i) => ({
        text: `p=${p}`,
        left: `${6 + panelWidth * i + panelWidth / 2}%`,
        top: 36,
        textStyle: { fontSize: 12 },
      })),
    ],
    legend: { bottom: 0 },
    grid: pValues.map((_, i) => ({
      left: `${8 + panelWidth * i}%`,
      width: `${panelWidth - 6}%`,
      top: 70,
      bottom: 60,
    })),
    xAxis: pValues.map((_, i) => ({ type: "log", name: "k", gridIndex: i })),
    yAxis: pValues.map((_, i) => ({ type: "log", name: i === 0 ? "C(k)" : "", gridIndex: i })),
    series,
  } as EChartsOption;
  return { id: "fig5", inputs, option, seriesCount: series.length };
}


function buildFig6(dir: string): FigureRecipe {
  const path = join(dir, "summary.csv");
  const table = loadCsv(path, "ensemble_summary");
  requireColumns(table, ["model", "n_target", "mean_log_ee"]);
  const groups = new Map<string, [number, number][]>();
  for (const row of table.rows) {
    let key: string;
    if (row.model === "cliquenet") {
      key = `m=${row.m}, p=${row.p}`;
    } else if (row.model === "er") {
      key = `er k=${row.mean_degree_target}`;
    } else {
      continue;
    }
    const point: [number, number] = [
      numeric(table, row, "n_target"),
      numeric(table, row, "mean_log_ee"),
    ];
    groups.set(key, [...(groups.get(key) ?? []), point]);
  }
  if (groups.size === 0) {
    throw new ValidationError(`${path}: no rows with model cliquenet or er`);
  }
  const series = [...groups.entries()].map(([name, points]) => ({
    name,
    type: "line",
    symbol: name.startsWith("er") ? "emptyTriangle" : "circle",
    symbolSize: 6,
    lineStyle: name.startsWith("er") ? { width: 1.5, type: "dashed" } : LINE_STYLE,
    data: points.sort((a, b) => a[0] - b[0]),
  }));
  const option = {
    title: { text: "Communicability: log EE against network size", left: "center" },
    legend: { bottom: 0, itemWidth: 18 },
    grid: { left: 80, right: 40, top: 50, bottom: 90 },
    xAxis: { type: "log", name: "N" },
    yAxis: { type: "log", name: "log EE" },
    series,
  } as EChartsOption;
  return { id: "fig6", inputs: [path], option, seriesCount: series.length };
}


export function buildRecipe(id: FigureId, inDir: string): FigureRecipe {
  switch (id) {
    case "fig2":
      return buildFig2(inDir);
    case "fig3":
      return buildTrendFigure("fig3", inDir, "mean_l", "L", "Mean shortest-path length against p");
    case "fig4":
      return buildTrendFigure("fig4", inDir, "mean_c", "C", "Mean clustering coefficient against p");
    case "fig5":
      return buildFig5(inDir);
    case "fig6":
      return buildFig6(inDir);
    default:
      throw new ValidationError(`unknown figure id '${id}'`);
  }
}
