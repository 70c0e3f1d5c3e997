/**
 * Schema-checked loading of the experiment CSV outputs.
 *
 * Every file starts with a `# cliquenet-csv v1 <kind>` comment line followed
 * by a header row. Loading verifies the schema line and kind up front;
 * column checks raise a ValidationError naming the offending column.
 */

import { readFileSync } from "fs";
import Papa from "papaparse";

export const SCHEMA_PREFIX = "# cliquenet-csv v1";

export class ValidationError extends Error {}

export interface CsvTable {
  path: string;
  kind: string;
  columns: string[];
  rows: Record<string, string>[];
}

export function loadCsv(path: string, expectedKind: string): CsvTable {
  let text: string;
  try {
    text = readFileSync(path, "utf-8");
  } catch {
    throw new ValidationError(`missing input file: ${path}`);
  }
  const newline = text.indexOf("\n");
  const schemaLine = newline < 0 ? text : text.slice(0, newline);
  if (!schemaLine.startsWith(SCHEMA_PREFIX)) {
    throw new ValidationError(`${path}: missing '${SCHEMA_PREFIX} <kind>' schema line`);
  }
  const kind = schemaLine.slice(SCHEMA_PREFIX.length).trim();
  if (kind !== expectedKind) {
    throw new ValidationError(`${path}: schema kind '${kind}', expected '${expectedKind}'`);
  }
  const parsed = Papa.parse<Record<string, string>>(text.slice(newline + 1), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    throw new ValidationError(`${path}: csv parse error at row ${e.row}: ${e.message}`);
  }
  return {
    path,
    kind,
    columns: parsed.meta.fields ?? [],
    rows: parsed.data,
  };
}

export function requireColumns(table: CsvTable, columns: string[]): void {
  for (const column of columns) {
    if (!table.columns.includes(column)) {
      throw new ValidationError(`${table.path}: missing column '${column}'`);
    }
  }
}

/** Numeric cell access; empty cells and non-numbers are schema violations. */
export function numeric(table: CsvTable, row: Record<string, string>, column: string): number {
  const raw = row[column];
  if (raw === undefined || raw === "") {
    throw new ValidationError(`${table.path}: empty value in column '${column}'`);
  }
  if (raw === "inf") return Infinity;
  const value = Number(raw);
  if (Number.isNaN(value)) {
    throw new ValidationError(`${table.path}: non-numeric value '${raw}' in column '${column}'`);
  }
  return value;
}
