// Wrapper-vs-core parity: every fixture's expected block was produced by
// direct core API calls (scripts/make_fixtures.py); the wrapper must
// reproduce it bit for bit through the CLI boundary.
import { readFileSync } from 'node:fs';
import path from 'node:path';
import { fileURLToPath } from 'node:url';
import { describe, expect, it } from 'vitest';

import {
    CoreError,
    coupledPair,
    entropyJk,
    entropyMle,
    entropyMm,
    mutualInformation,
    permutationTest,
    simulatePoisson,
    transferEntropy,
} from '../src/index.js';

const here = path.dirname(fileURLToPath(import.meta.url));
const cases = JSON.parse(readFileSync(path.join(here, 'fixtures', 'cases.json'), 'utf8'));

const byKind = (kind: string) => cases.filter((c: any) => c.kind === kind);

describe('frozen fixture parity', () => {
    it('covers at least ten cases', () => {
        expect(cases.length).toBeGreaterThanOrEqual(10);
    });

    for (const c of byKind('entropy_mle')) {
        it(c.name, async () => {
            expect(await entropyMle(c.input.symbols, c.input.bins)).toEqual(c.expected);
        });
    }

    for (const c of byKind('entropy_mm')) {
        it(c.name, async () => {
            expect(await entropyMm(c.input.symbols, c.input.bins)).toEqual(c.expected);
        });
    }

    for (const c of byKind('entropy_jk')) {
        it(c.name, async () => {
            expect(await entropyJk(c.input.symbols, c.input.bins)).toEqual(c.expected);
        });
    }

    for (const c of byKind('mutual_information')) {
        it(c.name, async () => {
            expect(await mutualInformation(c.input.x, c.input.y)).toEqual(c.expected);
        });
    }

    for (const c of byKind('transfer_entropy')) {
        it(c.name, async () => {
            const got = await transferEntropy(c.input.source, c.input.target, c.input.k, c.input.l);
            expect(got).toEqual(c.expected);
            expect(got.value).toBe(c.expected.value); // bit-for-bit, not approximate
        });
    }

    for (const c of byKind('permutation_test')) {
        it(c.name, async () => {
            const got = await permutationTest(
                c.input.source,
                c.input.target,
                c.input.k,
                c.input.l,
                c.input.surrogates,
                c.input.seed,
            );
            expect(got).toEqual(c.expected);
            expect(got.null_values).toEqual(c.expected.null_values);
        });
    }

    for (const c of byKind('simulate_poisson')) {
        it(c.name, async () => {
            const got = await simulatePoisson(c.input.rate, c.input.duration, c.input.seed);
            expect(got).toEqual(c.expected.timestamps);
        });
    }

    for (const c of byKind('coupled_pair')) {
        it(c.name, async () => {
            const got = await coupledPair(
                c.input.coupling,
                c.input.lag,
                c.input.length,
                c.input.seed,
            );
            expect(got).toEqual(c.expected);
        });
    }
});

describe('boundary errors carry core tags', () => {
    it('zero bins surfaces DegenerateRange', async () => {
        const err = await entropyMle([0, 1], 0).catch((e) => e);
        expect(err).toBeInstanceOf(CoreError);
        expect((err as CoreError).tag).toBe('DegenerateRange');
        expect((err as CoreError).message).toContain('DegenerateRange');
    });

    it('length mismatch surfaces LengthMismatch', async () => {
        const err = await mutualInformation([0, 1, 1], [0, 1]).catch((e) => e);
        expect(err).toBeInstanceOf(CoreError);
        expect((err as CoreError).tag).toBe('LengthMismatch');
        expect((err as CoreError).exitCode).toBe(2);
    });

    it('negative coupling surfaces InvalidParameter', async () => {
        const err = await coupledPair(-0.2, 1, 50, 1).catch((e) => e);
        expect(err).toBeInstanceOf(CoreError);
        expect((err as CoreError).tag).toBe('InvalidParameter');
    });
});
