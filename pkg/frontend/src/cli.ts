#!/usr/bin/env node
/**
 * figures <fig-id> --in DIR --out PATH
 *
 * Renders one figure (fig2..fig6) from the CSV outputs of the matching
 * experiment directory into an SVG file. Exits nonzero (writing no output)
 * when inputs are missing or fail schema validation.
 */

import { realpathSync } from "fs";
import { pathToFileURL } from "url";

import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { ValidationError } from "./csv.js";
import { FIGURE_IDS, FigureId, buildRecipe } from "./recipes.js";
import { renderToFile } from "./render.js";

export async function main(argv: string[]): Promise<number> {
  const args = await yargs(argv)
    .command("$0 <fig>", "render a figure from experiment CSVs", (y) =>
      y.positional("fig", {
        describe: "figure id",
        choices: FIGURE_IDS,
        demandOption: true,
      }),
    )
    .option("in", {
      alias: "i",
      type: "string",
      demandOption: true,
      describe: "experiment output directory",
    })
    .option("out", {
      alias: "o",
      type: "string",
      demandOption: true,
      describe: "output image path (.svg)",
    })
    .option("width", { type: "number", default: 900 })
    .option("height", { type: "number", default: 620 })
    .strict()
    .parse();

  try {
    const recipe = buildRecipe(args.fig as FigureId, args.in);
    renderToFile(recipe, args.out, args.width, args.height);
    console.log(`${args.fig}: ${recipe.seriesCount} series -> ${args.out}`);
    return 0;
  } catch (err) {
    if (err instanceof ValidationError) {
      console.error(`validation error: ${err.message}`);
      return 1;
    }
    throw err;
  }
}

const entry = process.argv[1] ? pathToFileURL(realpathSync(process.argv[1])).href : "";
if (entry === import.meta.url) {
  main(hideBin(process.argv)).then((code) => {
    process.exitCode = code;
  });
}
