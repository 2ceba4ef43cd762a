/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_run_free: (a: number, b: number) => void;
export const classify: (a: number, b: number, c: number) => number;
export const positive: (a: number, b: number, c: number, d: number, e: number, f: number) => number;
export const run_code: (a: number) => number;
export const run_stderr: (a: number) => [number, number];
export const run_stdout: (a: number) => [number, number];
export const symconv: (a: number, b: number, c: number, d: number, e: number) => number;
export const symmetric_game_file: (a: number, b: number, c: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
