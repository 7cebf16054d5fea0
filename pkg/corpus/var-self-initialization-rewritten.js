function foo(x) {
    return function() {
        var x; // "var x = x" works as two statements
        x = x;
        return x;
    }
}

foo(200)(); // answers undefined
