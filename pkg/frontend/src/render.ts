/** Headless SVG rendering of figure recipes via echarts server-side mode. */

import { writeFileSync } from "fs";
import * as echarts from "echarts";

import type { FigureRecipe } from "./recipes.js";

export function renderSvg(recipe: FigureRecipe, width = 900, height = 620): string {
  const chart = echarts.init(null, null, { renderer: "svg", ssr: true, width, height });
  try {
    chart.setOption({ animation: false, ...recipe.option });
    return chart.renderToSVGString();
  } finally {
    chart.dispose();
  }
}

export function renderToFile(recipe: FigureRecipe, outPath: string,
                             width = 900, height = 620): void {
  writeFileSync(outPath, renderSvg(recipe, width, height), "utf-8");
}
