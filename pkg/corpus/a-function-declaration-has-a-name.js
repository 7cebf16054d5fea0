function sum(a, b){
    return a + b;
}

// Calling a function
sum(1, 2); // answers 3
