#ifndef ONECVX_H
#define ONECVX_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result of every fallible call.
 */
typedef enum OnecvxStatus {
  ONECVX_STATUS_OK = 0,
  ONECVX_STATUS_NULL_POINTER = 1,
  ONECVX_STATUS_INVALID_UTF8 = 2,
  ONECVX_STATUS_MALFORMED = 3,
  ONECVX_STATUS_SHAPE = 4,
  ONECVX_STATUS_DUPLICATE = 5,
  ONECVX_STATUS_NOT_EXTENDABLE = 6,
  ONECVX_STATUS_NOT_ONE_CONVEX = 7,
  ONECVX_STATUS_INVALID_ARGUMENT = 8,
  ONECVX_STATUS_UNSUPPORTED = 9,
  ONECVX_STATUS_FAILED = 10,
} OnecvxStatus;

/*
 Opaque game handle.
 */
typedef struct OnecvxGame OnecvxGame;

/*
 Opaque payoff vector handle.
 */
typedef struct OnecvxPayoff OnecvxPayoff;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread, or null. Valid until
 the next failing call on the same thread.
 */
const char *onecvx_last_error(void);

/*
 Parses a JSON game document.

 # Safety
 `json` must be a nul-terminated string; `out` must be writable.
 */
enum OnecvxStatus onecvx_game_from_json(const char *json, struct OnecvxGame **out);

/*
 Builds a minimal game from `n` singleton values and v(N).

 # Safety
 `singletons` must point to `n` nul-terminated strings.
 */
enum OnecvxStatus onecvx_game_minimal(size_t n,
                                      const char *const *singletons,
                                      const char *grand,
                                      struct OnecvxGame **out);

/*
 # Safety
 `game` must come from this library and not be freed twice.
 */
void onecvx_game_free(struct OnecvxGame *game);

/*
 # Safety
 `game` must be a live handle; `out` must be writable.
 */
enum OnecvxStatus onecvx_game_player_count(const struct OnecvxGame *game, size_t *out);

/*
 Whether the game is complete (all coalition values known).

 # Safety
 `game` must be a live handle; `out` must be writable.
 */
enum OnecvxStatus onecvx_game_is_complete(const struct OnecvxGame *game, bool *out);

/*
 1-convexity of a complete game, or 1-convex extendability of an
 incomplete one.

 # Safety
 `game` must be a live handle; `out` must be writable.
 */
enum OnecvxStatus onecvx_game_check(const struct OnecvxGame *game, bool *out);

/*
 The game as a JSON document; free with [`onecvx_string_free`].

 # Safety
 `game` must be a live handle; `out` must be writable.
 */
enum OnecvxStatus onecvx_game_to_json(const struct OnecvxGame *game, char **out);

/*
 The upper game of an extendable minimal or upper-vector game.

 # Safety
 `game` must be a live handle; `out` must be writable.
 */
enum OnecvxStatus onecvx_upper_game(const struct OnecvxGame *game, struct OnecvxGame **out);

/*
 Evaluates a solution concept (tau, shapley, nucleolus, average,
 solidarity, conic, conic-shapley). `alpha` may be null.

 # Safety
 `game` must be a live handle; strings nul-terminated; `out` writable.
 */
enum OnecvxStatus onecvx_value(const struct OnecvxGame *game,
                               const char *concept,
                               const char *alpha,
                               struct OnecvxPayoff **out);

/*
 # Safety
 `payoff` must be a live handle or null.
 */
size_t onecvx_payoff_len(const struct OnecvxPayoff *payoff);

/*
 Entry `index` as "p/q"; borrowed, valid while the handle lives.

 # Safety
 `payoff` must be a live handle or null.
 */
const char *onecvx_payoff_entry(const struct OnecvxPayoff *payoff, size_t index);

/*
 # Safety
 `payoff` must come from this library and not be freed twice.
 */
void onecvx_payoff_free(struct OnecvxPayoff *payoff);

/*
 The claims report for `seed` as one line per claim: "id status".

 # Safety
 `out` must be writable.
 */
enum OnecvxStatus onecvx_verify_claims(uint64_t seed, char **out);

/*
 # Safety
 `s` must come from this library and not be freed twice.
 */
void onecvx_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ONECVX_H */
